"""Length profile of an operator word as a lattice path.

Each letter of a word contributes one straight segment, starting from the
base point ``*`` at the origin: a creation letter of length ``k`` steps by
``(+k, +k)``, an annihilation letter by ``(-k, -k)``, and a unit letter by
``(0, +1)`` regardless of its exponent.  Words whose shadow word is the
zero element get the empty path.

A path *ends on the star axis* when it is nonempty and its endpoint lies
on the nonnegative part of the vertical axis through ``*``.  Ending there
is the length-level test for being a vertex projection; it sees only
letter lengths, never edge identities, so it is cross-checked against the
edge-level reduction (see :mod:`graphproj.verify`).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Vertex
from .groupoid import OperatorWord, ZeroWord, to_shadow_word
from .semigroupoid import Unit


@dataclass(frozen=True, slots=True)
class LatticePath:
    """A polyline in the integer lattice; no points means the empty path."""

    points: tuple[tuple[int, int], ...]

    @property
    def is_empty(self) -> bool:
        return not self.points

    @property
    def endpoint(self) -> tuple[int, int] | None:
        return self.points[-1] if self.points else None


EMPTY_PATH = LatticePath(())


def lattice_path(t: OperatorWord) -> LatticePath:
    """The lattice path of a word; empty exactly when its shadow word is zero."""
    if isinstance(to_shadow_word(t), ZeroWord):
        return EMPTY_PATH
    x, y = 0, 0
    points = [(0, 0)]
    for letter in t.letters:
        k = letter.element.length
        if k == 0:
            y += 1
        elif letter.star:
            x -= k
            y -= k
        else:
            x += k
            y += k
        points.append((x, y))
    return LatticePath(tuple(points))


def has_star_axis_property(p: LatticePath) -> bool:
    """Nonempty and ending on the nonnegative vertical axis through ``*``."""
    if p.is_empty:
        return False
    x, y = p.points[-1]
    return x == 0 and y >= 0


def check_projection_lattice(t: OperatorWord) -> Vertex | None:
    """The projection vertex according to the lattice test, or ``None``.

    When the path ends on the star axis the vertex is read off the first
    letter: its source for a creation letter, its range for an annihilation
    letter, the vertex itself for a unit letter.
    """
    if not has_star_axis_property(lattice_path(t)):
        return None
    first = t.letters[0]
    if isinstance(first.element, Unit):
        return first.element.vertex
    return first.element.range if first.star else first.element.source


def export_path(p: LatticePath, format: str) -> str:
    """Render a path as ``csv`` (one ``x,y`` row per point) or ``svg``."""
    if format == "csv":
        if p.is_empty:
            return "# empty lattice path\n"
        return "".join(f"{x},{y}\n" for x, y in p.points)
    if format == "svg":
        return _to_svg(p)
    raise ValueError(f"unknown export format {format!r}")


def _to_svg(p: LatticePath) -> str:
    scale = 24
    if p.is_empty:
        return (
            '<svg xmlns="http://www.w3.org/2000/svg" width="240" height="60">\n'
            '  <!-- empty lattice path -->\n'
            '  <text x="10" y="35" font-size="14">empty lattice path</text>\n'
            "</svg>\n"
        )
    xs = [x for x, _ in p.points]
    ys = [y for _, y in p.points]
    min_x, max_x = min(xs + [0]) - 1, max(xs + [0]) + 1
    min_y, max_y = min(ys + [0]) - 1, max(ys + [0]) + 1
    width = (max_x - min_x) * scale
    height = (max_y - min_y) * scale

    def sx(x: int) -> int:
        return (x - min_x) * scale

    def sy(y: int) -> int:
        # SVG grows downward; flip so the path reads like a plot.
        return (max_y - y) * scale

    polyline = " ".join(f"{sx(x)},{sy(y)}" for x, y in p.points)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        # The star axis (vertical through the base point) and the horizontal axis.
        f'  <line x1="{sx(0)}" y1="0" x2="{sx(0)}" y2="{height}" '
        'stroke="#888" stroke-dasharray="4 3"/>',
        f'  <line x1="0" y1="{sy(0)}" x2="{width}" y2="{sy(0)}" stroke="#ccc"/>',
        f'  <polyline points="{polyline}" fill="none" stroke="#1a6" stroke-width="2"/>',
        f'  <circle cx="{sx(0)}" cy="{sy(0)}" r="4" fill="#d33"/>',
        f'  <circle cx="{sx(p.points[-1][0])}" cy="{sy(p.points[-1][1])}" r="3" fill="#1a6"/>',
        "</svg>",
    ]
    return "\n".join(lines) + "\n"


def render_path_figure(p: LatticePath, out_path: str, title: str | None = None) -> None:
    """Draw the path to an image file (format chosen by the extension)."""
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    if p.is_empty:
        ax.text(0.5, 0.5, "empty lattice path", ha="center", va="center")
        ax.set_xticks([])
        ax.set_yticks([])
    else:
        xs = [x for x, _ in p.points]
        ys = [y for _, y in p.points]
        ax.axvline(0, color="gray", linestyle="--", linewidth=1)
        ax.axhline(0, color="lightgray", linewidth=1)
        ax.plot(xs, ys, marker="o", color="tab:green")
        ax.plot([0], [0], marker="*", markersize=14, color="tab:red")
        ax.set_aspect("equal")
        ax.grid(True, linewidth=0.3)
        span = range(min(xs + ys) - 1, max(xs + ys) + 2)
        ax.set_xticks(list(span))
        ax.set_yticks(list(span))
    if title:
        ax.set_title(title)
    fig.savefig(out_path, dpi=150, bbox_inches="tight")
    plt.close(fig)
