"""Exception hierarchy for the congrlab engine."""


class CongrlabError(Exception):
    """Base class for all engine errors."""


class NotAUnit(CongrlabError):
    """Inversion was requested for a residue divisible by p."""


class NegativeValuation(CongrlabError):
    """A rational with p in its denominator cannot be reduced mod p^e."""


class PrecisionExhausted(CongrlabError):
    """A requested p-adic digit is not significant at the working precision."""


class DivisionByZeroMarker(CongrlabError):
    """Inversion of a p-adic zero marker."""


class ValuationViolation(CongrlabError):
    """A divisibility that the theory guarantees failed to hold.

    Either an engine bug or a genuine counterexample; never swallowed.
    """


class InternalInconsistency(CongrlabError):
    """Two independent computation paths disagreed."""


class UnknownIdentity(CongrlabError):
    """Identity name not present in the catalog."""


class UnknownCheck(CongrlabError):
    """Congruence check id not present in the catalog."""


class UnknownSeries(CongrlabError):
    """Series name not present in the catalog."""


class DomainError(CongrlabError):
    """Instance index outside an identity's declared domain."""


class CorruptCache(CongrlabError):
    """Cache file failed parsing or re-verification."""
