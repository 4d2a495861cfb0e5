"""SVG figures of K_n, the two-curve space D, and path/fiber overlays.

Geometry is written in model coordinates inside a transformed group, and
every bridge carries its gap as ``data-*`` attributes, so a rendered file
can be checked against :func:`~pathcomp.approx.build_k_n` after the fact.
"""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from fractions import Fraction

from .approx import MAX_LEVEL, build_k_n
from .errors import IoFailure, ResolutionTooLarge
from .space_k import KFiber, PLPath
from .ternary import CantorGap, as_rational

SVG_NS = "http://www.w3.org/2000/svg"

# D is sampled in u = 1/x: uniform steps in u resolve every half-oscillation
# of sin(pi/x) equally; x below 1/D_MAX_FREQUENCY is left to the limit segment.
D_MAX_FREQUENCY = 50
D_SAMPLES_PER_HALF_PERIOD = 16

SUBJECTS = ("k", "d", "path", "fiber")


@dataclass(frozen=True)
class RenderSpec:
    subject: str
    output_path: str | None = None
    scale: float = 400.0
    level: int = 3
    path: PLPath | None = None
    fiber: KFiber | None = None
    max_level: int = MAX_LEVEL

    def __post_init__(self):
        if self.subject not in SUBJECTS:
            raise ValueError(f"unknown subject {self.subject!r}; expected one of {SUBJECTS}")
        if self.scale <= 0:
            raise ValueError("scale must be positive")
        if self.level > self.max_level:
            raise ResolutionTooLarge(f"level {self.level} exceeds the resolution cap {self.max_level}")
        if self.subject == "path" and self.path is None:
            raise ValueError("path overlay needs a path")
        if self.subject == "fiber" and self.fiber is None:
            raise ValueError("fiber overlay needs a fiber")


def _num(z) -> str:
    return repr(float(z))


def _svg(width: float, height: float) -> ET.Element:
    return ET.Element(
        "svg",
        xmlns=SVG_NS,
        version="1.1",
        width=_num(width),
        height=_num(height),
        viewBox=f"0 0 {_num(width)} {_num(height)}",
    )


def _stroke(el: ET.Element, color: str, width: float = 1.5) -> None:
    el.set("fill", "none")
    el.set("stroke", color)
    el.set("stroke-width", _num(width))
    el.set("vector-effect", "non-scaling-stroke")


def _k_document(n: int, scale: float, max_level: int = MAX_LEVEL):
    model = build_k_n(n, max_level=max_level)
    margin = 0.05 * scale
    root = _svg(scale + 2 * margin, scale + 2 * margin)
    title = ET.SubElement(root, "title")
    title.text = f"K_{n}"
    group = ET.SubElement(
        root,
        "g",
        id="k-n",
        transform=f"translate({_num(margin)},{_num(margin + scale)}) scale({_num(scale)},{_num(-scale)})",
    )
    group.set("data-level", str(n))
    size = model.resolution
    for c, gap in enumerate(model.columns):
        if gap is None:
            rect = ET.SubElement(
                group, "rect", x=_num(Fraction(c, size)), y="0.0", width=_num(Fraction(1, size)), height="1.0"
            )
            rect.set("class", "column")
            rect.set("data-column", str(c))
            rect.set("fill", "#4a6fa5")
            rect.set("stroke", "none")
    seen: set[CantorGap] = set()
    for gap, _edge in model.bridge_edges():
        if gap in seen:
            continue
        seen.add(gap)
        line = ET.SubElement(
            group,
            "line",
            x1=_num(gap.left),
            y1=_num(gap.bridge),
            x2=_num(gap.right),
            y2=_num(gap.bridge),
        )
        line.set("class", "bridge")
        line.set("data-level", str(gap.level))
        line.set("data-parity", gap.parity)
        line.set("data-left", str(gap.left))
        line.set("data-right", str(gap.right))
        line.set("data-height", str(gap.bridge))
        _stroke(line, "#c0392b", 2.0)
    return root, group


def p1_curve(x: float) -> float:
    return 2 - math.sin(math.pi / x)


def p2_curve(x: float) -> float:
    # evaluated at -x for x in (0, 1]
    return -2 + math.sin(math.pi / x)


def _d_samples() -> list[float]:
    steps = (D_MAX_FREQUENCY - 1) * D_SAMPLES_PER_HALF_PERIOD
    return [1.0 / (1 + k / D_SAMPLES_PER_HALF_PERIOD) for k in range(steps + 1)]


def _d_document(scale: float) -> ET.Element:
    # model window [-1, 1] x [-3, 3]
    margin = 0.05 * scale
    root = _svg(2 * scale + 2 * margin, 6 * scale + 2 * margin)
    title = ET.SubElement(root, "title")
    title.text = "D = P1 u P2"
    group = ET.SubElement(
        root,
        "g",
        id="space-d",
        transform=f"translate({_num(margin + scale)},{_num(margin + 3 * scale)}) scale({_num(scale)},{_num(-scale)})",
    )
    group.set("data-max-frequency", str(D_MAX_FREQUENCY))
    group.set("data-samples-per-half-period", str(D_SAMPLES_PER_HALF_PERIOD))
    xs = _d_samples()
    pieces = {
        "p1-curve": [(x, p1_curve(x)) for x in xs],
        "p1-segment": [(1.0, 2.0), (0.0, -2.0)],
        "p1-limit": [(0.0, -3.0), (0.0, -1.0)],
        "p2-curve": [(-x, p2_curve(x)) for x in xs],
        "p2-segment": [(-1.0, -2.0), (0.0, 2.0)],
        "p2-limit": [(0.0, 1.0), (0.0, 3.0)],
    }
    colors = {"p1": "#1f77b4", "p2": "#d62728"}
    for name, pts in pieces.items():
        el = ET.SubElement(group, "polyline", points=" ".join(f"{_num(x)},{_num(y)}" for x, y in pts))
        el.set("class", name)
        _stroke(el, colors[name[:2]], 1.0)
    return root


def _overlay_path(group: ET.Element, pl: PLPath) -> None:
    pts = " ".join(f"{_num(v.x)},{_num(v.y)}" for v in pl.vertices)
    el = ET.SubElement(group, "polyline", points=pts)
    el.set("class", "path")
    el.set("data-vertices", ";".join(f"{v.x},{v.y}" for v in pl.vertices))
    _stroke(el, "#f39c12", 3.0)


def _overlay_fiber(group: ET.Element, fib: KFiber) -> None:
    for seg in fib.segments:
        el = ET.SubElement(
            group, "line", x1=_num(seg.start.x), y1=_num(seg.start.y), x2=_num(seg.end.x), y2=_num(seg.end.y)
        )
        el.set("class", "fiber-segment")
        el.set("data-t", str(fib.t))
        _stroke(el, "#27ae60", 3.0)


def render(spec: RenderSpec) -> str:
    """Render ``spec`` to an SVG string, writing it to ``spec.output_path`` if set."""
    if spec.subject == "d":
        root = _d_document(spec.scale)
    else:
        root, group = _k_document(spec.level, spec.scale, spec.max_level)
        if spec.subject == "path":
            _overlay_path(group, spec.path)
        elif spec.subject == "fiber":
            _overlay_fiber(group, spec.fiber)
    ET.indent(root)
    text = ET.tostring(root, encoding="unicode")
    if spec.output_path:
        try:
            with open(spec.output_path, "w", encoding="utf-8") as fh:
                fh.write('<?xml version="1.0" encoding="UTF-8"?>\n')
                fh.write(text)
                fh.write("\n")
        except OSError as exc:
            raise IoFailure(f"cannot write {spec.output_path}: {exc}") from exc
    return text


def _find(root: ET.Element, cls: str):
    return [el for el in root.iter() if el.get("class") == cls]


def check_k_render(svg_text: str, n: int) -> list[str]:
    """Compare a rendered K_n against the cubical model; returns problems found."""
    root = ET.fromstring(svg_text)
    model = build_k_n(n)
    problems = []
    expected_gaps = {gap for gap, _ in model.bridge_edges()}
    drawn = set()
    for el in _find(root, "bridge"):
        level = int(el.get("data-level"))
        gap = CantorGap(level, as_rational(el.get("data-left")), as_rational(el.get("data-right")))
        drawn.add(gap)
        if level > n:
            problems.append(f"bridge {gap} has level > {n}")
        if el.get("data-parity") != gap.parity:
            problems.append(f"bridge {gap} labelled {el.get('data-parity')}")
        y1, y2 = float(el.get("y1")), float(el.get("y2"))
        if y1 != y2 or y1 != float(gap.bridge):
            problems.append(f"bridge {gap} drawn at height {y1}, expected {gap.bridge}")
        if (float(el.get("x1")), float(el.get("x2"))) != (float(gap.left), float(gap.right)):
            problems.append(f"bridge {gap} drawn over the wrong interval")
    if drawn != expected_gaps:
        problems.append(f"bridges drawn {len(drawn)} vs model {len(expected_gaps)}")
    cols = {int(el.get("data-column")) for el in _find(root, "column")}
    model_cols = {c for c, g in enumerate(model.columns) if g is None}
    if cols != model_cols:
        problems.append("square columns differ from the model")
    return problems
