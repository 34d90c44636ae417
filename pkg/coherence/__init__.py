"""Dutch-book engine: price validation, classical coherence books, Born-rule coherence."""

from .born_book import BornCoherence, check_born_coherence
from .classical import (
    CoherenceVerdict,
    check_additivity,
    check_complement,
    check_joint_conditional,
    check_price_range,
    complement,
    validate_prices,
)
from .tickets import BUY, SELL, DutchBookWitness, Ticket, Transaction, evaluate_payoff

__all__ = [
    "BUY",
    "SELL",
    "BornCoherence",
    "CoherenceVerdict",
    "DutchBookWitness",
    "Ticket",
    "Transaction",
    "check_additivity",
    "check_born_coherence",
    "check_complement",
    "check_joint_conditional",
    "check_price_range",
    "complement",
    "evaluate_payoff",
    "validate_prices",
]
