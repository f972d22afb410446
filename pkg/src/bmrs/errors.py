"""Exception hierarchy shared by every module."""


class BMRSError(Exception):
    """Base class for all errors raised by this package."""


class TermTypeError(BMRSError, TypeError):
    """A term has no typing derivation."""


class ClosureError(BMRSError):
    def __init__(self, name, where=None):
        self.name = name
        self.where = where
        msg = f"undefined function {name!r}"
        if where is not None:
            msg += f" (referenced from {where!r})"
        super().__init__(msg)


class DivergenceError(BMRSError):
    """Evaluation re-entered a (function, index) pair that was still in progress.

    Since a call's value depends only on the pair, re-entry means no finite
    derivation exists.
    """

    def __init__(self, function, index, stack=()):
        self.function = function
        self.index = index
        self.stack = tuple(stack)
        self.context = None
        super().__init__(f"divergence: ({function}, {index}) re-entered")

    def with_context(self, **context):
        self.context = context
        extra = ", ".join(f"{k}={v}" for k, v in context.items())
        self.args = (f"{self.args[0]} [{extra}]",)
        return self


class DomainError(BMRSError, ValueError):
    pass


class WellDefinednessError(BMRSError):
    def __init__(self, word, index, copy, chars):
        self.word = word
        self.index = index
        self.copy = copy
        self.chars = tuple(chars)
        super().__init__(
            f"not well-defined on {word!s}: heads for {', '.join(map(repr, self.chars))} "
            f"are all true at index {index}, copy {copy}"
        )


class AlphabetMismatchError(BMRSError, ValueError):
    pass


class NotStrictError(BMRSError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"interpretation is not strict: {report.counterexample}")


class NotWellDefinedError(BMRSError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"interpretation is not well-defined: {report.counterexample}")


class NormalFormError(BMRSError):
    pass


class ParseError(BMRSError):
    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        where = f"{line}:{col}: " if line is not None else ""
        super().__init__(where + message)


class UnknownSuiteError(BMRSError, KeyError):
    def __str__(self):
        return str(self.args[0])


class UndefinedFinalError(BMRSError):
    pass
