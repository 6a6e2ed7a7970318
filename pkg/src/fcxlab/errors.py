"""Exception hierarchy shared by every fcxlab module."""


class FcxError(Exception):
    """Base class for all library errors."""


class InputError(FcxError):
    """Raised for malformed or out-of-contract input (CLI exit code 2)."""


class EmptySpace(InputError):
    pass


class BadKind(InputError):
    pass


class NotRepresentable(InputError):
    pass


class ModelMismatch(InputError):
    pass


class NotMember(InputError):
    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class NotUnit(FcxError):
    pass


class NotDisjoint(InputError):
    pass


class ZeroSetsIntersect(FcxError):
    pass


class NotSeparated(FcxError):
    pass


class EmptyGeneratorList(InputError):
    pass


class ImproperIdeal(InputError):
    pass


class NotMaximal(InputError):
    pass


class TooLarge(InputError):
    pass


class NotVertex(InputError):
    pass


class EqualVertices(InputError):
    pass


class NotAdjacent(InputError):
    pass


class ParseError(InputError):
    pass


class SchemaError(InputError):
    pass


class ConfigError(InputError):
    pass
