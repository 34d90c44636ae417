"""
Dutch books for the basic rules of probability.

Each check returns a CoherenceVerdict; when the declared prices are
incoherent the verdict carries a witness portfolio that loses money on
every outcome. Ticket payouts and prices are scaled by ``stake``.

* prices must lie in [0, 1] and complementary events must sum to 1
* additivity: p(E or F) = p(E) + p(F) for exclusive E, F
* joint/conditional: p(E and F) = p(E) p(F|E), via the equivalence of the
  conditional ticket T_(F|E) with the pair {T_(E and F), T_X}
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Mapping, Optional

from operators import ValidationReport
from .tickets import BUY, SELL, DutchBookWitness, Ticket, Transaction, flip

PRICE_TOL = 1e-12
DEFAULT_STAKE = 1.0
NEGATIONS = ("¬", "~", "not ")


@dataclass(frozen=True)
class CoherenceVerdict:
    coherent: bool
    witness: Optional[DutchBookWitness] = None
    discrepancy: float = 0.0

    def to_dict(self) -> Dict:
        out = {"coherent": self.coherent, "discrepancy": self.discrepancy}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        return out


def complement(event: str) -> str:
    for neg in NEGATIONS:
        if event.startswith(neg):
            return event[len(neg):]
    return "¬" + event


def _check_unit(**values: float):
    for name, v in values.items():
        if not 0.0 <= v <= 1.0:
            raise ValueError(f"{name}={v} must lie in [0, 1]")


def _check_stake(stake: float):
    if stake <= 0:
        raise ValueError("stake must be positive")


def validate_prices(prices: Mapping[str, float]) -> ValidationReport:
    """Every price in [0, 1]; an event and its complement, when both priced, sum to 1."""
    violations = []
    for event, price in prices.items():
        if not math.isfinite(price):
            violations.append((float("inf"), f"{event}: price {price} is not a finite number"))
        elif price < 0:
            violations.append((-price, f"{event}: negative price {price} (paying to give a ticket away)"))
        elif price > 1:
            violations.append((price - 1, f"{event}: price {price} above the $1 payout"))
    seen = set()
    for event, price in prices.items():
        other = complement(event)
        key = frozenset((event, other))
        if other in prices and key not in seen:
            seen.add(key)
            if not (math.isfinite(price) and math.isfinite(prices[other])):
                continue
            total = price + prices[other]
            violations.append((abs(total - 1), f"{event} and {other} sum to {total}, not 1"))
    return ValidationReport.from_violations(violations, PRICE_TOL)


def check_price_range(event: str, price: float, stake: float = DEFAULT_STAKE) -> CoherenceVerdict:
    """Single-ticket book against a price below 0 or above 1."""
    _check_stake(stake)
    if not math.isfinite(price):
        raise ValueError(f"price of {event} is not a finite number: {price}")
    if 0.0 <= price <= 1.0:
        return CoherenceVerdict(coherent=True)
    ticket = Ticket(description=f"Worth ${stake:g} if {event}", event=event,
                    pays_on=frozenset({event}), payout=stake, declared_price=price * stake)
    # Negative price: the bookie takes the ticket off Alice's hands and she pays for it.
    # Price above 1: the bookie sells it to her for more than it can pay.
    direction = SELL if price < 0 else BUY
    witness = DutchBookWitness.from_transactions(
        [Transaction(direction, ticket)], outcomes=[event, complement(event)])
    return CoherenceVerdict(coherent=False, witness=witness,
                            discrepancy=-price if price < 0 else price - 1)


def _additivity_book(pE: float, pF: float, pEorF: float, stake: float,
                     e: str, f: str, union: str, outcomes) -> CoherenceVerdict:
    delta = pEorF - pE - pF
    if abs(delta) <= PRICE_TOL:
        return CoherenceVerdict(coherent=True, discrepancy=delta)

    both = frozenset({e, f})
    t_union = Ticket(f"Worth ${stake:g} if {union}", union, both, stake, pEorF * stake)
    t_e = Ticket(f"Worth ${stake:g} if {e}", e, frozenset({e}), stake, pE * stake)
    t_f = Ticket(f"Worth ${stake:g} if {f}", f, frozenset({f}), stake, pF * stake)
    # Union overpriced: Alice buys it and sells the parts; underpriced: the reverse
    direction = BUY if delta > 0 else SELL
    transactions = [Transaction(direction, t_union),
                    Transaction(flip(direction), t_e),
                    Transaction(flip(direction), t_f)]
    witness = DutchBookWitness.from_transactions(transactions, outcomes)
    return CoherenceVerdict(coherent=False, witness=witness, discrepancy=delta)


def check_additivity(pE: float, pF: float, pEorF: float,
                     stake: float = DEFAULT_STAKE) -> CoherenceVerdict:
    """Three-ticket book on exclusive events E, F; outcomes E, F, neither."""
    _check_unit(pE=pE, pF=pF, pEorF=pEorF)
    _check_stake(stake)
    return _additivity_book(pE, pF, pEorF, stake, "E", "F", "E∨F",
                            outcomes=("E", "F", "neither"))


def check_complement(pE: float, pNotE: float, stake: float = DEFAULT_STAKE) -> CoherenceVerdict:
    """p(E) + p(not E) = 1: additivity against the sure event, priced at 1."""
    _check_unit(pE=pE, pNotE=pNotE)
    _check_stake(stake)
    return _additivity_book(pE, pNotE, 1.0, stake, "E", "¬E", "E∨¬E", outcomes=("E", "¬E"))


def check_joint_conditional(pE: float, pFgivenE: float, pEandF: float,
                            stake: float = DEFAULT_STAKE) -> CoherenceVerdict:
    """p(E and F) = p(E) p(F|E); outcomes E∧F, E∧¬F, ¬E.

    T_(F|E) pays on E∧F and is refunded on ¬E. It is equivalent to holding
    T_(E∧F) plus T_X = [worth p(F|E) if ¬E], whose coherent price is
    p(F|E) p(¬E). Pricing the two sides differently is the book.
    """
    _check_unit(pE=pE, pFgivenE=pFgivenE, pEandF=pEandF)
    _check_stake(stake)
    delta = pE * pFgivenE - pEandF
    if abs(delta) <= PRICE_TOL:
        return CoherenceVerdict(coherent=True, discrepancy=delta)

    ef, enf, ne = "E∧F", "E∧¬F", "¬E"
    t_cond = Ticket(f"Worth ${stake:g} if E∧F, but refund if ¬E", "F|E", frozenset({ef}),
                    stake, pFgivenE * stake, conditional_refund=ne, refund_on=frozenset({ne}))
    t_joint = Ticket(f"Worth ${stake:g} if E∧F", ef, frozenset({ef}), stake, pEandF * stake)
    t_x = Ticket(f"Worth ${pFgivenE * stake:g} if ¬E", "X", frozenset({ne}),
                 pFgivenE * stake, pFgivenE * (1 - pE) * stake)
    # delta > 0: the conditional ticket is dearer than its equivalent pair
    direction = BUY if delta > 0 else SELL
    transactions = [Transaction(direction, t_cond),
                    Transaction(flip(direction), t_joint),
                    Transaction(flip(direction), t_x)]
    witness = DutchBookWitness.from_transactions(transactions, (ef, enf, ne))
    return CoherenceVerdict(coherent=False, witness=witness, discrepancy=delta)
