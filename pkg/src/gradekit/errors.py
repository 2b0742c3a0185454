"""Exception hierarchy.

Every error carries an optional ``witness``: the concrete data (element,
pair, triple, index) that made a check fail.
"""


class GradekitError(Exception):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# groups
class NotClosed(GradekitError):
    pass


class NoIdentity(GradekitError):
    pass


class NotAssociative(GradekitError):
    pass


class NoInverse(GradekitError):
    pass


class NotHomomorphism(GradekitError):
    pass


class NotSubgroup(GradekitError):
    pass


class NotNormal(GradekitError):
    pass


# linear algebra
class BasisMismatch(GradekitError):
    pass


# algebras and functors
class NotValidated(GradekitError):
    pass


class NotHomogeneous(GradekitError):
    pass


class NotUnital(GradekitError):
    pass


class NotClassicallyGraded(GradekitError):
    pass


class NotInverseSystem(GradekitError):
    pass


class NotMono(GradekitError):
    pass


class NotEpi(GradekitError):
    pass


class InvalidHom(GradekitError):
    pass


class InvalidLieHom(InvalidHom):
    pass


# tensor / enveloping
class DepthExceeded(GradekitError):
    pass


# workbench
class ParseError(GradekitError):
    def __init__(self, message, file=None, path=None, witness=None):
        super().__init__(message, witness)
        self.file = file
        self.path = path


class ValidationError(GradekitError):
    def __init__(self, message, file=None, path=None, witness=None, cause=None):
        super().__init__(message, witness)
        self.file = file
        self.path = path
        self.cause = cause


class UnknownCommand(GradekitError):
    pass
