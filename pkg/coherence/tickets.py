"""
Lottery tickets, transactions and Dutch-book witnesses.

A ticket pays ``payout`` when its event holds and is priced at
``declared_price``; a conditional ticket is refunded (no payout, price
returned) when its refund event holds. Transactions are recorded from
Alice's side: "buy" means she pays the price and holds the ticket, "sell"
means she receives the price and owes the payout.

A witness is a portfolio whose net payoff is negative on every outcome of
its (finite, exhaustively enumerated) outcome space.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

import pandas as pd

BUY = "buy"
SELL = "sell"
LOSS_TOL = 1e-12


@dataclass(frozen=True)
class Ticket:
    description: str
    event: str
    pays_on: FrozenSet[str]
    payout: float
    declared_price: float
    conditional_refund: Optional[str] = None
    refund_on: FrozenSet[str] = frozenset()

    def refunded(self, outcome: str) -> bool:
        return outcome in self.refund_on

    def value(self, outcome: str) -> float:
        return self.payout if outcome in self.pays_on else 0.0

    def to_dict(self) -> Dict:
        return {
            "description": self.description,
            "event": self.event,
            "pays_on": sorted(self.pays_on),
            "payout": self.payout,
            "declared_price": self.declared_price,
            "conditional_refund": self.conditional_refund,
            "refund_on": sorted(self.refund_on),
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "Ticket":
        return cls(description=data["description"], event=data["event"],
                   pays_on=frozenset(data["pays_on"]), payout=float(data["payout"]),
                   declared_price=float(data["declared_price"]),
                   conditional_refund=data.get("conditional_refund"),
                   refund_on=frozenset(data.get("refund_on", ())))


@dataclass(frozen=True)
class Transaction:
    direction: str
    ticket: Ticket

    def __post_init__(self):
        if self.direction not in (BUY, SELL):
            raise ValueError(f"direction must be 'buy' or 'sell', got {self.direction!r}")

    def payoff(self, outcome: str) -> float:
        """Alice's net cash from this transaction once ``outcome`` is known."""
        if self.ticket.refunded(outcome):
            return 0.0
        net = self.ticket.value(outcome) - self.ticket.declared_price
        return net if self.direction == BUY else -net

    def to_dict(self) -> Dict:
        return {"dir": self.direction, "ticket": self.ticket.to_dict()}


def flip(direction: str) -> str:
    return SELL if direction == BUY else BUY


@dataclass(frozen=True)
class DutchBookWitness:
    transactions: Tuple[Transaction, ...]
    guaranteed_loss: float
    outcome_table: Dict[str, float]
    notes: Tuple[str, ...] = field(default=())

    @classmethod
    def from_transactions(cls, transactions: Sequence[Transaction], outcomes: Iterable[str],
                          notes: Sequence[str] = ()) -> "DutchBookWitness":
        """Evaluate every outcome; refuses portfolios that are not a sure loss."""
        table = {o: sum(t.payoff(o) for t in transactions) for o in outcomes}
        if not table:
            raise ValueError("a witness needs at least one outcome")
        loss = -max(table.values())
        if loss <= 0:
            raise ValueError(f"portfolio is not a sure loss (best outcome pays {-loss:.6g})")
        return cls(transactions=tuple(transactions), guaranteed_loss=loss,
                   outcome_table=table, notes=tuple(notes))

    @property
    def outcomes(self) -> Tuple[str, ...]:
        return tuple(self.outcome_table)

    def verify(self) -> bool:
        """Recompute every outcome from the ticket semantics."""
        for outcome, recorded in self.outcome_table.items():
            actual = sum(t.payoff(outcome) for t in self.transactions)
            if abs(actual - recorded) > LOSS_TOL or actual > -self.guaranteed_loss + LOSS_TOL:
                return False
        return self.guaranteed_loss > 0

    def to_dict(self) -> Dict:
        return {
            "transactions": [t.to_dict() for t in self.transactions],
            "guaranteed_loss": self.guaranteed_loss,
            "outcome_table": dict(self.outcome_table),
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "DutchBookWitness":
        transactions = tuple(Transaction(t["dir"], Ticket.from_dict(t["ticket"]))
                             for t in data["transactions"])
        return cls(transactions=transactions, guaranteed_loss=float(data["guaranteed_loss"]),
                   outcome_table={k: float(v) for k, v in data["outcome_table"].items()},
                   notes=tuple(data.get("notes", ())))

    def to_frame(self) -> pd.DataFrame:
        """Per-outcome payoff of every transaction plus the net column."""
        rows = {}
        for k, t in enumerate(self.transactions):
            label = f"{k}:{t.direction} {t.ticket.event}"
            rows[label] = [t.payoff(o) for o in self.outcomes]
        frame = pd.DataFrame(rows, index=list(self.outcomes))
        frame["net"] = [self.outcome_table[o] for o in self.outcomes]
        return frame


def evaluate_payoff(witness: DutchBookWitness, outcome: str) -> float:
    """Alice's net payoff for ``outcome``; KeyError if the outcome is not in the table."""
    if outcome not in witness.outcome_table:
        raise KeyError(f"Unknown outcome {outcome!r}; witness covers {list(witness.outcome_table)}")
    return witness.outcome_table[outcome]
