"""Exception types raised by the library.

Everything derives from :class:`QuiverError`, so callers (and the CLI) can
catch one base class for "the input was structurally bad" as opposed to a
programming error.
"""


class QuiverError(Exception):
    """Base class for all domain errors raised by this package."""


# -- quiver validation -------------------------------------------------------

class DuplicateVertex(QuiverError):
    pass


class DanglingArrow(QuiverError):
    pass


class DuplicateArrowRecord(QuiverError):
    pass


class NonPositiveMult(QuiverError):
    pass


class NotABijection(QuiverError):
    pass


# -- serialization ------------------------------------------------------------

class ParseError(QuiverError):
    """Malformed JSON or DOT text; the message carries the position."""


class SchemaError(QuiverError):
    """Well-formed JSON that does not match the quiver schema; names the field."""


# -- translation windows and automorphisms ------------------------------------

class CyclicGenerator(QuiverError):
    pass


class BadRange(QuiverError):
    pass


class SigmaNotBijective(QuiverError):
    pass


class ArrowNotPreserved(QuiverError):
    pass


class MarginTooSmall(QuiverError):
    pass


class NotARoot(QuiverError):
    pass


class BadPartition(QuiverError):
    pass


class NormalFormViolated(QuiverError):
    pass


# -- cyclic-group quivers ------------------------------------------------------

class NotSL(QuiverError):
    pass


class VertexNotKept(QuiverError):
    pass


class NotHereditary(QuiverError):
    pass


class NotSemisimple(QuiverError):
    pass


class WrongDimension(QuiverError):
    pass


# -- presentations and reductions ----------------------------------------------

class BadRemovedSet(QuiverError):
    pass


# -- shifted-sum endomorphism quivers -------------------------------------------

class SymmetryViolated(QuiverError):
    pass


class MissingB(QuiverError):
    pass
