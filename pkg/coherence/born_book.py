"""
Born-rule coherence.

Given Alice's probabilities p for the reference measurement, her
conditionals R for the actual measurement, and her declared q for the
actual measurement, the only coherent q is q* = born(p, R, d). Any other
declaration is met with the declaration-ticket book: the bookie buys
T_(q*) = "worth $1 if Alice declares q*" at Alice's price x < 1, after
which Alice, forced by coherence to declare q*, pays out $1.

How Alice prices T_(q*) is not fixed by the argument itself. Here
x = max(0, 1 - TV(q, q*)) where TV is the total-variation distance, and
the verdict says so in its notes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np

from errors import DimensionError, ValidationError
from representation import CondMatrix, OutcomeDist, ProbState, born
from .classical import DEFAULT_STAKE, validate_prices
from .tickets import SELL, DutchBookWitness, Ticket, Transaction

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10
DECLARED = "declares q*"
PRICE_CONVENTION = ("implied price x = max(0, 1 - sum_j |q(j) - q*(j)| / 2) is a "
                    "total-variation convention for Alice's price of T_(q*), not a derived quantity")


@dataclass(frozen=True)
class BornCoherence:
    """Verdict of check_born_coherence: the coherent q*, the gap, and a book if any."""
    coherent: bool
    q_star: OutcomeDist
    discrepancy: np.ndarray
    witness: Optional[DutchBookWitness] = None
    implied_price: Optional[float] = None

    @property
    def max_discrepancy(self) -> float:
        return float(np.max(np.abs(self.discrepancy)))

    def to_dict(self) -> Dict:
        out = {
            "coherent": self.coherent,
            "q_star": self.q_star.q.tolist(),
            "discrepancy": self.discrepancy.tolist(),
            "max_discrepancy": self.max_discrepancy,
        }
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
            out["implied_price"] = self.implied_price
            out["convention"] = PRICE_CONVENTION
        return out


def _declaration_prices(q: OutcomeDist) -> Dict[str, float]:
    return {f"q({j})": float(v) for j, v in enumerate(q.q)}


def check_born_coherence(p: ProbState, R: CondMatrix, q: OutcomeDist, d: int,
                         tol: float = DEFAULT_TOL, stake: float = DEFAULT_STAKE) -> BornCoherence:
    """Compare a declared q against born(p, R, d); emit a sure-loss book when they differ."""
    if stake <= 0:
        raise ValueError("stake must be positive")
    if p.n != d * d:
        raise DimensionError(f"p has {p.n} entries, expected d^2 = {d * d}")
    if q.n != R.J:
        raise DimensionError(f"q has {q.n} entries but R has {R.J} outcomes")

    report = validate_prices(_declaration_prices(q)).merge(q.report())
    if not report.ok:
        raise ValidationError(f"declared q is not a valid probability assignment: "
                              f"{'; '.join(report.messages)}", report=report)

    q_star = born(p, R, d)
    gap = q.q - q_star.q
    if float(np.max(np.abs(gap))) <= tol:
        return BornCoherence(coherent=True, q_star=q_star, discrepancy=gap)

    x = max(0.0, 1.0 - float(np.abs(gap).sum()) / 2.0)
    # a gap below one ulp of the $1 payout leaves no sure loss to book
    if x >= 1.0:
        return BornCoherence(coherent=True, q_star=q_star, discrepancy=gap)
    logger.debug("Born-incoherent declaration: max gap %.3g, implied price %.6f", np.abs(gap).max(), x)
    ticket = Ticket(description=f"Worth ${stake:g} if Alice declares q*", event=DECLARED,
                    pays_on=frozenset({DECLARED}), payout=stake, declared_price=x * stake)
    # The bookie buys, so Alice is the seller
    witness = DutchBookWitness.from_transactions(
        [Transaction(SELL, ticket)], outcomes=[DECLARED], notes=[PRICE_CONVENTION])
    return BornCoherence(coherent=False, q_star=q_star, discrepancy=gap,
                         witness=witness, implied_price=x)
