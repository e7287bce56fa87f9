"""Dot diagrams of basis slices.

A basis class in grading a + b*sigma is drawn at file coordinates
(a/2, b/2): the grid is spaced every two grading units.  Type-C2/C2
classes are solid dots; the type-C2/e class is an open dot that may sit
anywhere on the dashed line a + b = const, so the line itself is drawn.
"""

from __future__ import annotations

from .catalog import basis_slice


class UnsupportedFormatError(ValueError):
    pass


def diagram(pres, coset, window, fmt="ascii"):
    rows = basis_slice(pres, coset, window)
    if fmt == "ascii":
        return _ascii(pres, rows, window)
    if fmt == "svg":
        return _svg(pres, rows, window)
    raise UnsupportedFormatError("format must be ascii or svg, not %r" % fmt)


def _line_const(pres):
    return pres.levele.y_degree() if pres.has_atoms else None


def _ascii(pres, rows, window):
    (a0, a1), (b0, b1) = window
    solid = {(g.a, g.b) for g, label in rows if label == "C2/C2"}
    open_ = {(g.a, g.b) for g, label in rows if label == "C2/e"}
    line = _line_const(pres)
    out = []
    for b in range(b1 - (b1 % 2), b0 - 1, -2):
        cells = []
        for a in range(a0 - (a0 % 2), a1 + 1, 2):
            if (a, b) in solid:
                cells.append("*")
            elif (a, b) in open_:
                cells.append("o")
            elif line is not None and a + b == line:
                cells.append("/")
            elif a == 0 and b == 0:
                cells.append("+")
            elif a == 0:
                cells.append("|")
            elif b == 0:
                cells.append("-")
            else:
                cells.append(".")
        out.append("%5d " % b + " ".join(cells))
    footer = "      " + " ".join("%-2d" % a if a % 4 == 0 else "  " for a in range(a0 - (a0 % 2), a1 + 1, 2))
    out.append(footer)
    return "\n".join(out) + "\n"


def _svg(pres, rows, window):
    (a0, a1), (b0, b1) = window
    scale = 14
    pad = 20

    def X(a):
        return pad + (a - a0) * scale // 2

    def Y(b):
        return pad + (b1 - b) * scale // 2

    width = X(a1) + pad
    height = Y(b0) + pad
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
        'viewBox="0 0 %d %d">' % (width, height, width, height)
    ]
    for a in range(a0 - (a0 % 2), a1 + 1, 2):
        parts.append(
            '<line x1="%d" y1="%d" x2="%d" y2="%d" stroke="#ddd"/>'
            % (X(a), Y(b1), X(a), Y(b0))
        )
    for b in range(b0 - (b0 % 2), b1 + 1, 2):
        parts.append(
            '<line x1="%d" y1="%d" x2="%d" y2="%d" stroke="#ddd"/>'
            % (X(a0), Y(b), X(a1), Y(b))
        )
    parts.append(
        '<line x1="%d" y1="%d" x2="%d" y2="%d" stroke="#000"/>'
        % (X(a0), Y(0), X(a1), Y(0))
    )
    parts.append(
        '<line x1="%d" y1="%d" x2="%d" y2="%d" stroke="#000"/>'
        % (X(0), Y(b0), X(0), Y(b1))
    )
    line = _line_const(pres)
    if line is not None:
        parts.append(
            '<line x1="%d" y1="%d" x2="%d" y2="%d" stroke="#555" '
            'stroke-dasharray="4 3"/>' % (X(line - b1), Y(b1), X(line - b0), Y(b0))
        )
    for g, label in sorted(rows, key=lambda r: (r[0].a, r[0].b, r[1])):
        if label == "C2/C2":
            parts.append('<circle cx="%d" cy="%d" r="4" fill="#000"/>' % (X(g.a), Y(g.b)))
        else:
            parts.append(
                '<circle cx="%d" cy="%d" r="4" fill="#fff" stroke="#000"/>'
                % (X(g.a), Y(g.b))
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
