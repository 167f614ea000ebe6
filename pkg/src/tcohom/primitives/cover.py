"""forms on the universal cover that are affine in Re z₂, and the closed-form (1,1) Aeppli primitives."""

from dataclasses import dataclass
from typing import final

from tcohom.calculus import LEGS, OperatorKind, apply
from tcohom.lattice import Mode, mode_multiplier_a, mode_multiplier_b
from tcohom.specform import CoeffFunction, Frame, Leg, SpectralForm

# spellchecker:words deldelbar


@final
@dataclass(frozen=True)
class CoverForm:
    """The form periodic + Re z₂ · linear on C².

    It descends to X exactly when linear vanishes.
    """

    periodic: SpectralForm
    linear: SpectralForm

    @classmethod
    def of(cls, periodic: SpectralForm) -> "CoverForm":
        """Lift a form on X."""
        return cls(periodic, periodic.scale(0))

    @property
    def is_periodic(self) -> bool:
        """The form descends to X."""
        return self.linear.is_zero

    def __add__(self, other: "CoverForm") -> "CoverForm":
        """Add two cover forms."""
        return CoverForm(
            self.periodic.combine(other.periodic), self.linear.combine(other.linear)
        )

    def evaluate(self, z1: complex, z2: complex) -> dict[Frame, complex]:
        """Evaluate every frame coefficient at a point of C²."""
        out = self.periodic.evaluate(z1, z2)
        for frame, value in self.linear.evaluate(z1, z2).items():
            out[frame] = out.get(frame, 0j) + z2.real * value
        return out


def apply_cover(op: OperatorKind, form: CoverForm) -> CoverForm:
    """Apply ∂, ∂̄ or d by the chain rule; ∂_{z₂} Re z₂ = ∂̄_{z₂} Re z₂ = 1/2."""
    if op not in (OperatorKind.DEL, OperatorKind.DELBAR, OperatorKind.D):
        msg = f"{op} is not defined on cover forms"
        raise ValueError(msg)

    lattice = form.linear.lattice
    periodic = apply(op, form.periodic)
    for component in op.components:
        leg = LEGS[component]
        if not leg.on_z2:
            continue
        dz = SpectralForm.monomial(lattice, Frame((leg,)), 0.5)
        periodic = periodic.combine(dz.wedge(form.linear))
    return CoverForm(periodic, apply(op, form.linear))


_DZ1_DZB1 = Frame((Leg.DZ1, Leg.DZB1))
_DZ2_DZB1 = Frame((Leg.DZ2, Leg.DZB1))
_DZ1_DZB2 = Frame((Leg.DZ1, Leg.DZB2))


@final
@dataclass(frozen=True)
class _Affine:
    """The coefficient periodic + Re z₂ · linear of a single mode."""

    periodic: CoeffFunction
    linear: CoeffFunction

    def del_z2(self, b: complex) -> "_Affine":
        return _Affine(
            self.periodic.del_z2(b) + self.linear.scale(0.5), self.linear.del_z2(b)
        )

    def delbar_z2(self, b: complex) -> "_Affine":
        return _Affine(
            self.periodic.delbar_z2(b) + self.linear.scale(0.5), self.linear.delbar_z2(b)
        )

    def shift(self, c: CoeffFunction) -> "_Affine":
        return _Affine(self.periodic + c, self.linear)

    def scale(self, c: complex) -> "_Affine":
        return _Affine(self.periodic.scale(c), self.linear.scale(c))


_ZERO = CoeffFunction.constant(0)


def closed_form_primitives(w: SpectralForm) -> tuple[CoverForm, CoverForm, SpectralForm]:
    """Explicit (ψ₁, ψ₂, residual) with w = ∂̄ψ₁ + ∂ψ₂ + residual for w in G^{1,1}.

    For each σ ≠ 0 write a₁, a₂, a₃ for the coefficients of dz₁∧dz̄₁, dz₂∧dz̄₁, dz₁∧dz̄₂, and
    a₁ = C₁e^{2πσ₂t₄} + C₂e^{-2πσ₂t₄} (σ₂ ≠ 0) or C₂t₄ + C₁ (σ₂ = 0). Then

        b₁₁ = -C₁e^{2πσ₂t₄}/A,  b₂₁ = -C₂e^{-2πσ₂t₄}/Ā             (σ₂ ≠ 0)
        b₁₁ = (C₂z̄₂ - 2iC₁)/(2iA),  b₂₁ = -C₂z₂/(2iĀ)              (σ₂ = 0)
        b₁₂ = (∂_{z₂}b₂₁ - a₂)/A,  b₂₂ = -(∂̄_{z₂}b₁₁ + a₃)/Ā

    and ψ₁ = b₁₁dz₁ + b₁₂dz₂, ψ₂ = b₂₁dz̄₁ + b₂₂dz̄₂.
    The σ₂ = 0 terms involve Re z₂, so the primitives only live on the universal cover.
    The residual is the σ = 0 part of w.
    """
    lattice = w.lattice
    psi1: list[tuple[Mode, Frame, _Affine]] = []
    psi2: list[tuple[Mode, Frame, _Affine]] = []

    for mode in w.modes():
        if mode.is_zero:
            continue
        a = mode_multiplier_a(lattice, mode)
        a_bar = a.conjugate()
        b = mode_multiplier_b(mode)
        a1 = w.coefficient(_DZ1_DZB1, mode)
        a2 = w.coefficient(_DZ2_DZB1, mode)
        a3 = w.coefficient(_DZ1_DZB2, mode)

        s2 = mode.s2
        if s2 != 0:
            c1, c2 = a1.terms.get((0, s2), 0j), a1.terms.get((0, -s2), 0j)
            b11 = _Affine(CoeffFunction.monomial(-c1 / a, 0, s2), _ZERO)
            b21 = _Affine(CoeffFunction.monomial(-c2 / a_bar, 0, -s2), _ZERO)
        else:
            c1, c2 = a1.terms.get((0, 0), 0j), a1.terms.get((1, 0), 0j)
            # z̄₂ = Re z₂ - i t₄ and z₂ = Re z₂ + i t₄
            b11 = _Affine(
                CoeffFunction.of({(1, 0): -c2 / (2 * a), (0, 0): -c1 / a}),
                CoeffFunction.constant(c2 / (2j * a)),
            )
            b21 = _Affine(
                CoeffFunction.monomial(-c2 / (2 * a_bar), 1, 0),
                CoeffFunction.constant(-c2 / (2j * a_bar)),
            )
        b12 = b21.del_z2(b).shift(-a2).scale(1 / a)
        b22 = b11.delbar_z2(b).shift(a3).scale(-1 / a_bar)

        psi1 += [(mode, Frame((Leg.DZ1,)), b11), (mode, Frame((Leg.DZ2,)), b12)]
        psi2 += [(mode, Frame((Leg.DZB1,)), b21), (mode, Frame((Leg.DZB2,)), b22)]

    def lift(items: list[tuple[Mode, Frame, _Affine]], bidegree: tuple[int, int]) -> CoverForm:
        return CoverForm(
            SpectralForm.build(
                lattice, [(m, f, c.periodic) for m, f, c in items], bidegree=bidegree, limits=w.limits
            ),
            SpectralForm.build(
                lattice, [(m, f, c.linear) for m, f, c in items], bidegree=bidegree, limits=w.limits
            ),
        )

    residual = w.restrict(lambda mode: mode.is_zero)
    return lift(psi1, (1, 0)), lift(psi2, (0, 1)), residual
