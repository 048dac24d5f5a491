"""Exception hierarchy shared by all modules."""


class AlbertError(Exception):
    """Base class for all package errors."""


class MixedParents(AlbertError):
    """Operands belong to different parent structures."""


class DivisionByZero(AlbertError):
    pass


class NotGalois(AlbertError):
    """Field operation requires a full automorphism group."""


class NormNotOne(AlbertError):
    pass


class ExhaustedCandidates(AlbertError):
    """Constructive search ran out of candidates (signals a bug)."""


class NotIrreducible(AlbertError):
    pass


class InvariantViolation(AlbertError):
    """A constructor-time structural check failed."""


class NotSubalgebra(AlbertError):
    pass


class NotInCenter(AlbertError):
    """A reduced norm/trace failed to descend to the centre."""


class NotInvertible(AlbertError):
    pass


class NotInvertibleGenerator(AlbertError):
    pass


class NormMismatch(AlbertError):
    pass


class NotSpecialUnitary(AlbertError):
    pass


class NotSymmetric(AlbertError):
    pass


class NotIsomorphism(AlbertError):
    pass


class NotAutomorphism(AlbertError):
    pass


class NotSimilarity(AlbertError):
    pass


class NotStabilizing(AlbertError):
    pass


class RecoveryFailed(AlbertError):
    pass


class SingularImageOfOne(AlbertError):
    pass


class CyclicElement(AlbertError):
    """Wedderburn factorization requires a non-cyclic element."""


class RetriesExhausted(AlbertError):
    pass


class WrongBackend(AlbertError):
    pass


class NoDecomposition(AlbertError):
    """No commutator decomposition is available on the constructive paths."""


class ParseError(AlbertError):
    pass


class UnknownSuite(AlbertError):
    pass
