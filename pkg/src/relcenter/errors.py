"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class. ``witness`` carries the offending data, when there is one."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class InputError(AlgebraError):
    """Problems with user-supplied descriptions (files, records, arguments)."""


class MalformedSpec(InputError):
    pass


class GroupTooLarge(InputError):
    pass


class IndexOutOfRange(AlgebraError, IndexError):
    pass


class NotAssociative(AlgebraError):
    pass


class NoIdentity(AlgebraError):
    pass


class NotHomomorphism(AlgebraError):
    pass


class NotNormal(AlgebraError):
    pass


class NotSubgroup(AlgebraError):
    pass


class NotSurjective(AlgebraError):
    pass


class NotIsomorphism(AlgebraError):
    pass


class NotAbelian(AlgebraError):
    pass


class FormNotValid(AlgebraError):
    """Common parent of the quadratic-form validation failures."""


class NotSymmetricUnderInversion(FormNotValid):
    pass


class NotBiadditive(FormNotValid):
    pass


class NonzeroAtIdentity(FormNotValid):
    pass


class NotInjective(AlgebraError):
    pass


class FormNotPreserved(AlgebraError):
    pass


class NotConstantOnCosets(AlgebraError):
    def __init__(self, message: str, witness=None, report=None):
        super().__init__(message, witness)
        self.report = report


class NotCentral(AlgebraError):
    pass


class NotCharacter(AlgebraError):
    pass


class NotClassConstant(AlgebraError):
    pass


class DegreeRecoveryFailed(AlgebraError):
    pass
