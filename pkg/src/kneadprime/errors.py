"""Exception hierarchy shared by all kneadprime modules."""


class KneadPrimeError(Exception):
    """Base class; the CLI maps these to exit status 1."""


class TooShort(KneadPrimeError):
    """A finite word cannot supply the requested symbols."""


class WordSyntaxError(KneadPrimeError, ValueError):
    pass


class LimitTooSmall(KneadPrimeError, ValueError):
    pass


class NotPrime(KneadPrimeError, ValueError):
    pass


class NotPeriodic(KneadPrimeError, ValueError):
    pass


class ContainsC(KneadPrimeError, ValueError):
    pass


class BudgetExceeded(KneadPrimeError):
    """Materializing a word or lap set would exceed the configured cap."""


class OutOfDomain(KneadPrimeError, ValueError):
    pass


class NoPrimePoints(KneadPrimeError):
    pass


class NotAdmissible(KneadPrimeError, ValueError):
    pass


class NoConvergence(KneadPrimeError):
    pass


class NoBracket(KneadPrimeError):
    pass


class EmptyInput(KneadPrimeError, ValueError):
    pass
