class MackeyError(Exception):
    """Base class for every error raised by cpmackey."""


class PreconditionError(MackeyError):
    """An argument does not meet the documented precondition of an operation."""


class PrimeMismatchError(PreconditionError):
    def __init__(self, p: int, q: int, what: str = "arguments"):
        super().__init__(f"{what} are defined over different primes: {p} vs {q}")
        self.primes = (p, q)


class IllDefinedMapError(MackeyError):
    """A matrix does not send the source relations into the target relations."""

    def __init__(self, column: int, detail: str = ""):
        msg = f"map is not well-defined: relation column {column} is not sent to zero"
        super().__init__(f"{msg} ({detail})" if detail else msg)
        self.column = column


class AxiomViolationError(MackeyError):
    def __init__(self, axiom: str):
        super().__init__(f"Mackey axiom violated: {axiom}")
        self.axiom = axiom


class SquareViolationError(MackeyError):
    def __init__(self, square: str):
        super().__init__(f"homomorphism does not commute with {square}")
        self.square = square


class LiftError(MackeyError):
    def __init__(self, generator: int):
        super().__init__(
            f"generator {generator} does not lie in the image of the inclusion"
        )
        self.generator = generator


class NotCohomologicalError(MackeyError):
    pass


class InputError(MackeyError):
    """A command-line value or input file cannot be read or parsed."""
