"""Basis change across a rational degree-3 isogeny: computes the 3-adic
image of the isogenous curve from the image of the source curve, and
regenerates the label-to-label transfer table."""

from __future__ import annotations

from dataclasses import dataclass, field

from .modmat import Mat2
from .subgroups import Line, SubgroupRep, closure, stable_lines

WORKING_MODULUS = 27  # 3-adic images are determined at this level
LIFT_MODULUS = 81  # minimal truncation making entry/3 well defined mod 27


class LineNotStableError(ValueError):
    pass


def _line_mover(line: Line, n: int) -> Mat2:
    """Invertible u mod n sending the line's direction to (1, 0)."""
    x, y = line.rep
    if x == 1:
        return Mat2(n, 1, 0, -y, 1)
    # rep is (0, 1)
    return Mat2(n, 0, 1, -1, 0)


def transform_image(g: SubgroupRep, line: Line) -> SubgroupRep:
    """Image group of the curve on the other end of the degree-3 isogeny
    whose kernel reduces to ``line``.

    The group is conjugated so the kernel line becomes the first basis
    vector, lifted to the full preimage mod 81, pushed through
    [[a, b], [c, d]] -> [[a, 3b], [c/3, d]], and read off mod 27.
    """
    if g.n != WORKING_MODULUS:
        raise ValueError(f"group must be given mod {WORKING_MODULUS}, got {g.n}")
    if line.p != 3:
        raise ValueError("transform is implemented for the prime 3")
    if line not in stable_lines(g, 3):
        raise LineNotStableError(f"line {line.rep} is not stable for the group")
    moved = g.conjugated(_line_mover(line, g.n))
    out_gens = []
    for m in moved.small_gens():
        a, b, c, d = m.entries()
        if c % 3 != 0:
            raise ArithmeticError(
                "lower-left entry not divisible by 3 after normalization"
            )
        out_gens.append(Mat2(WORKING_MODULUS, a, 3 * b, c // 3, d))
    # image of ker(GL2(81) -> GL2(27)) under the push-through
    out_gens.append(Mat2(WORKING_MODULUS, 1, 0, 9, 1))
    return closure(out_gens, WORKING_MODULUS)


DUAL_KERNEL_LINE = Line(3, (0, 1))  # kernel of the dual isogeny, new basis


@dataclass
class TransformResult:
    input_label: str
    line: Line
    output_group: SubgroupRep
    output_label: str | None


@dataclass
class EdgeRule:
    """How labels propagate across a graph edge of the given prime."""

    prime: int
    kind: str  # "equal" or "transform"

    def __str__(self) -> str:
        if self.kind == "equal":
            return f"labels equal across edge (prime {self.prime})"
        return "labels related by the degree-3 transform"


def ell_neq_p_rule(edge_prime: int) -> EdgeRule:
    if edge_prime == 3:
        return EdgeRule(3, "transform")
    return EdgeRule(edge_prime, "equal")


@dataclass
class TableRow:
    source: str
    printed_output: str
    line_outputs: dict = field(default_factory=dict)  # Line -> label or None
    reproduced: bool = False


@dataclass
class Table1Report:
    rows: list
    total: int
    reproduced: int

    @property
    def ok(self) -> bool:
        return self.reproduced == self.total


def line_outputs(g: SubgroupRep, identify) -> dict:
    """Label of the transform along each stable line; identify is a callable
    SubgroupRep -> label-or-None."""
    return {
        line: identify(transform_image(g, line)) for line in stable_lines(g, 3)
    }


def regenerate_table1(catalog, rows: list[tuple[str, str]]) -> Table1Report:
    """Reproduce every (source label, output label) row: some stable line of
    the source must transform to the printed output."""
    out = []
    done = 0
    for src, printed in rows:
        g = catalog.group(src)
        louts = line_outputs(g, catalog.identify)
        row = TableRow(src, printed, louts)
        row.reproduced = printed in louts.values()
        done += row.reproduced
        out.append(row)
    return Table1Report(rows=out, total=len(out), reproduced=done)
