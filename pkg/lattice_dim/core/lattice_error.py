""" $lic$
Copyright (C) 2024-2026 by The lattice_dim Developers

This program is free software: you can redistribute it and/or modify it under
the terms of the Modified BSD-3 License as published by the Open Source
Initiative.

This program is distributed in the hope that it will be useful, but WITHOUT ANY
WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A
PARTICULAR PURPOSE. See the BSD-3 License for more details.

You should have received a copy of the Modified BSD-3 License along with this
program. If not, see <https://opensource.org/licenses/BSD-3-Clause>.
"""


class LatticeError(ValueError):
    '''
    Base class of all lattice validation and computation errors.
    '''
    pass


class DuplicateLabel(LatticeError):
    ''' Two elements share the same name. '''
    pass


class UnknownElement(LatticeError):
    ''' A cover pair or subset references a name not in the lattice. '''
    pass


class CycleError(LatticeError):
    ''' The cover relation is not acyclic. '''
    pass


class NotBounded(LatticeError):
    ''' No unique bottom or no unique top. '''
    pass


class NotALattice(LatticeError):
    '''
    Some pair of elements lacks a unique meet or join. The offending pair of
    element names is kept in `pair`.
    '''

    def __init__(self, message, pair=None):
        super(NotALattice, self).__init__(message)
        self.pair = pair


class NotACover(LatticeError):
    ''' A subset required to be a cover is not one. '''
    pass


class InvalidSubset(LatticeError):
    ''' A subset violates the precondition of an operation. '''
    pass


class InvalidK(LatticeError):
    ''' A construction parameter is out of range. '''
    pass


class SizeLimit(LatticeError):
    ''' An exponential enumeration was requested above its size bound. '''
    pass
