"""Exception hierarchy shared by all modules."""


class QBernoulliError(Exception):
    """Base class for errors raised by this package."""


class DivisionByZero(QBernoulliError, ZeroDivisionError):
    pass


class EvalAtPole(QBernoulliError, ZeroDivisionError):
    pass


class PoleAtOne(QBernoulliError, ArithmeticError):
    pass


class SeriesAtPole(QBernoulliError, ArithmeticError):
    pass


class SeriesDomainError(QBernoulliError, ValueError):
    pass


class ArityError(QBernoulliError, ValueError):
    pass


class PrecisionExhausted(QBernoulliError, ArithmeticError):
    pass


class TermBudgetExceeded(QBernoulliError, ValueError):
    pass


class UnknownCaseId(QBernoulliError, KeyError):
    pass


class RangeBoundExceeded(QBernoulliError, ValueError):
    pass
