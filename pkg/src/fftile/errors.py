"""Exception types raised across the package."""


class FFTileError(Exception):
    pass


class NotPrime(FFTileError, ValueError):
    pass


class ZeroInverse(FFTileError, ZeroDivisionError):
    pass


class ModulusMismatch(FFTileError, ValueError):
    pass


class ZeroGaloisIndex(FFTileError, ValueError):
    pass


class NonRationalResult(FFTileError, ArithmeticError):
    pass


class ZeroDirection(FFTileError, ValueError):
    pass


class NotATiling(FFTileError, ValueError):
    pass


class UnsupportedSize(FFTileError, ValueError):
    pass


class UnsupportedDim(FFTileError, ValueError):
    pass


class IncompleteDomain(FFTileError, ValueError):
    pass


class BadIndex(FFTileError, IndexError):
    pass


class ZeroBase(FFTileError, ValueError):
    pass


class ZeroDistance(FFTileError, ValueError):
    pass


class BadResidue(FFTileError, ValueError):
    pass


class BudgetExceeded(FFTileError, RuntimeError):
    pass


class InternalContradiction(FFTileError, AssertionError):
    """A computed object contradicts a proven structural theorem.

    Never caught internally; the CLI maps it to exit code 3.
    """
