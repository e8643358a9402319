"""Exception types shared across the package."""


class KFibError(Exception):
    """Base class for every error raised by kfib."""


class NotDivisible(KFibError, ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class DivisorZero(KFibError, ZeroDivisionError):
    pass


class BothZero(KFibError, ValueError):
    """gcd(0, 0) is undefined."""


class KTooSmall(KFibError, ValueError):
    def __init__(self, k):
        super().__init__(f"k must be >= 2, got {k}")
        self.k = k


class VanishingIndex(KFibError, ValueError):
    def __init__(self, n, k):
        super().__init__(f"F_{{{n},{k}}} vanishes identically")
        self.n = n
        self.k = k


class MonomialIndex(KFibError, ValueError):
    def __init__(self, n, k):
        super().__init__(f"F_{{{n},{k}}} is a monomial; it has no second-highest term")
        self.n = n
        self.k = k


class IndexOutOfRange(KFibError, ValueError):
    pass


class StructureViolation(KFibError):
    """An exact polynomial contradicts the predicted x^r (x^k+1)^rho Q(x^k) shape."""


class ConvergenceFailure(KFibError, RuntimeError):
    def __init__(self, n, k, residual, message="root iteration did not converge"):
        super().__init__(f"{message} for (n={n}, k={k}); residual {residual:.3e}")
        self.n = n
        self.k = k
        self.residual = residual
