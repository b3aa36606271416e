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

from . import constructions
from . import covers
from . import dimensions
from . import filters
from . import lattice_io
from . import oracle
from . import theorems
from .constructions import TaggedElement, parse_tag
from .covers import CoverFamily
from .dimensions import DimensionReport
from .element_set import ElementSet
from .filters import Filter
from .fixture import Fixture, SubFixture, check_fixture, check_sub_fixture
from .lattice import Lattice, build_lattice, is_isomorphic
from .lattice_error import LatticeError, DuplicateLabel, UnknownElement, \
        CycleError, NotBounded, NotALattice, NotACover, InvalidSubset, \
        InvalidK, SizeLimit
from .lattice_gen import GeneratorConfig, enumerate_lattices, random_lattice
from .option import Option
from .sublattice import PrincipalFilter, principal_filter
from .theorems import GapReport, Violation
