"""Exception types shared across the library."""


class ScomultError(Exception):
    """Base class for all library errors."""


class AxiomViolation(ScomultError):
    """A structure failed one of its defining axioms.

    Carries the name of the violated axiom and the witnessing elements
    (as canonical indices) so callers can report exactly what broke.
    """

    def __init__(self, axiom, witness=()):
        self.axiom = axiom
        self.witness = tuple(witness)
        detail = f" at {self.witness}" if self.witness else ""
        super().__init__(f"axiom violated: {axiom}{detail}")


class SizeCapExceeded(ScomultError):
    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} has size {size}, exceeding the cap {cap}")


class MCSViolation(ScomultError):
    """A subset failed one of the multiplicatively-closed-set conditions."""


class ContainsZero(MCSViolation):
    def __init__(self):
        super().__init__("subset contains 0")


class MissingOne(MCSViolation):
    def __init__(self):
        super().__init__("subset does not contain 1")


class NotClosed(MCSViolation):
    def __init__(self, s, t):
        self.pair = (s, t)
        super().__init__(f"subset not closed under products: {s}*{t} escapes")


class DisjointnessFailure(ScomultError):
    """A predicate's disjointness precondition failed.

    Distinct from a plain `False` verdict: the predicate is simply not
    applicable to the instance.
    """

    def __init__(self, element, condition):
        self.element = element
        self.condition = condition
        super().__init__(f"{condition} fails: element {element} is shared")


class PreconditionUnmet(ScomultError):
    def __init__(self, message):
        super().__init__(message)


class UnknownStatement(ScomultError):
    def __init__(self, statement_id, known):
        self.statement_id = statement_id
        super().__init__(
            f"unknown statement {statement_id!r}; known: {', '.join(sorted(known))}"
        )


class InstanceParseError(ScomultError):
    """Instance-file parse failure, anchored to a line number."""

    def __init__(self, line_no, message):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")
