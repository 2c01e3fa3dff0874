"""Deterministic text and LaTeX rendering of space expressions.

The text format round-trips through the parser; see README for the
grammar.  LaTeX output is one-way.
"""

from __future__ import annotations

from .spaces import (
    AttachedComplex,
    Gauge,
    LieGroup,
    Loop,
    MappingSpace,
    Product,
    SpaceExpr,
    Sphere,
    SuspCP2,
    Suspension,
    TwoCell,
    Wedge,
)

__all__ = ["render", "render_text", "render_latex"]


def _text_atom(e: SpaceExpr) -> str:
    """Render with parentheses when the result is not self-delimiting."""
    s = render_text(e)
    if isinstance(e, (Wedge, Product, AttachedComplex, Suspension, Loop)):
        return f"({s})"
    return s


def render_text(e: SpaceExpr) -> str:
    if isinstance(e, Sphere):
        return f"S^{e.n}"
    if isinstance(e, SuspCP2):
        return "CP^2" if e.k == 0 else f"SCP2^{e.k}"
    if isinstance(e, TwoCell):
        return f"TC({e.bottom},{e.top};{e.attach.value} mod {e.attach.modulus})"
    if isinstance(e, AttachedComplex):
        skel = render_text(e.skeleton)
        if isinstance(e.skeleton, (Wedge, Product, Suspension, Loop, AttachedComplex)):
            skel = f"({skel})"
        tag = f"u[{e.label}]" if e.label else "u"
        return f"{skel} {tag} e^{e.top}"
    if isinstance(e, LieGroup):
        return e.name
    if isinstance(e, MappingSpace):
        return f"Map*({render_text(e.domain)}, {render_text(e.codomain)})"
    if isinstance(e, Gauge):
        inner = render_text(e.base)
        if e.group:
            return f"G_{e.label}({inner}; {e.group})"
        return f"G_{e.label}({inner})"
    if isinstance(e, Loop):
        return f"Omega^{e.power} {_text_atom(e.space)}"
    if isinstance(e, Suspension):
        return f"Sigma^{e.power} {_text_atom(e.space)}"
    if isinstance(e, Wedge):
        return " v ".join(_text_atom(p) if isinstance(p, Product) else render_text(p) for p in e.parts)
    if isinstance(e, Product):
        return " x ".join(_text_atom(p) if isinstance(p, Wedge) else render_text(p) for p in e.parts)
    raise TypeError(f"not a space expression: {e!r}")


_LIE_LATEX = {"E6": "E_6", "E7": "E_7", "E8": "E_8"}


def render_latex(e: SpaceExpr) -> str:
    if isinstance(e, Sphere):
        return f"S^{{{e.n}}}"
    if isinstance(e, SuspCP2):
        cp = r"\mathbb{C}P^{2}"
        return cp if e.k == 0 else rf"\Sigma^{{{e.k}}}{cp}"
    if isinstance(e, TwoCell):
        return rf"S^{{{e.bottom}}} \cup_{{{e.attach.value}}} e^{{{e.top}}}"
    if isinstance(e, AttachedComplex):
        skel = render_latex(e.skeleton)
        if isinstance(e.skeleton, (Wedge, Product)):
            skel = f"({skel})"
        cup = rf"\cup_{{{e.label}}}" if e.label else r"\cup"
        return rf"{skel} {cup} e^{{{e.top}}}"
    if isinstance(e, LieGroup):
        return _LIE_LATEX.get(e.name, e.name)
    if isinstance(e, MappingSpace):
        return rf"{{\rm Map}}^{{\ast}}({render_latex(e.domain)}, {render_latex(e.codomain)})"
    if isinstance(e, Gauge):
        label = r"\alpha" if e.label == "alpha" else e.label
        return rf"\mathcal{{G}}_{{{label}}}({render_latex(e.base)})"
    if isinstance(e, Loop):
        inner = render_latex(e.space)
        if isinstance(e.space, (Wedge, Product, AttachedComplex, Suspension, TwoCell)):
            inner = f"({inner})"
        return rf"\Omega^{{{e.power}}} {inner}"
    if isinstance(e, Suspension):
        inner = render_latex(e.space)
        if isinstance(e.space, (Wedge, Product, AttachedComplex, TwoCell)):
            inner = f"({inner})"
        sig = r"\Sigma" if e.power == 1 else rf"\Sigma^{{{e.power}}}"
        return f"{sig} {inner}"
    if isinstance(e, Wedge):
        return r" \vee ".join(
            f"({render_latex(p)})" if isinstance(p, Product) else render_latex(p) for p in e.parts
        )
    if isinstance(e, Product):
        return r" \times ".join(
            f"({render_latex(p)})" if isinstance(p, Wedge) else render_latex(p) for p in e.parts
        )
    raise TypeError(f"not a space expression: {e!r}")


def render(e: SpaceExpr, fmt: str = "text") -> str:
    """Render an expression deterministically; "text" or "latex"."""
    if fmt == "text":
        return render_text(e)
    if fmt == "latex":
        return render_latex(e)
    raise ValueError(f"unknown format {fmt!r}")
