"""Exception types raised across the package."""


class LieToriError(Exception):
    """Base class for all errors raised by :mod:`lietori`."""


class ConstraintViolation(LieToriError, ValueError):
    pass


class RankMismatch(LieToriError, ValueError):
    pass


class ZeroCoroot(LieToriError, ValueError):
    pass


class NotMonomial(LieToriError, ValueError):
    pass


class NotAdNilpotent(LieToriError, ValueError):
    pass


class NotHomogeneous(LieToriError, ValueError):
    pass


class NotA2Pair(LieToriError, ValueError):
    pass


class NoWitness(LieToriError, RuntimeError):
    """No division partner was found; for quantum-torus Lie tori this is a bug."""


class NotElementary(LieToriError, ValueError):
    """The quantum matrix has an entry outside {1, -1}."""


class NotHomogeneousImage(LieToriError, ValueError):
    pass


class OctonionRankBelow3(LieToriError, ValueError):
    pass


class CoordinateMismatch(LieToriError, ValueError):
    """Coordinate descriptor is incompatible with the requested rank."""
