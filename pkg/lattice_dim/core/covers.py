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

import itertools
from collections import namedtuple

import fastcache

from .element_set import ElementSet
from .lattice import Lattice
from .lattice_error import InvalidSubset, NotACover, SizeLimit
from .option import Option
from .. import util

COVER_FAMILY_LIST = ['owner',
                     'covers',
                    ]

class CoverFamily(namedtuple('CoverFamily', COVER_FAMILY_LIST)):
    '''
    A family of covers of a lattice, ordered by their bitsets.
    '''

    def __new__(cls, owner, covers):
        if not isinstance(owner, Lattice):
            raise TypeError('CoverFamily: owner must be a Lattice instance.')
        covers = tuple(sorted(covers, key=lambda c: c.mask))
        for cov in covers:
            cov.check_owner(owner)
        if len(set(covers)) != len(covers):
            raise ValueError('CoverFamily: covers must be distinct.')
        return super(CoverFamily, cls).__new__(cls, owner, covers)

    @classmethod
    def from_masks(cls, owner, masks):
        ''' Build from cover bitsets. '''
        return cls(owner, (ElementSet.from_mask(owner, m) for m in masks))

    def names(self):
        ''' Sorted list of the sorted name lists of the covers. '''
        return sorted(cov.names() for cov in self.covers)

    def name_sets(self):
        ''' Set of frozensets of names, for order-free comparison. '''
        return set(frozenset(cov.names()) for cov in self.covers)


def join_irreducible_mask(lattice, base=None):
    '''
    Bitset of the join-irreducible elements of the principal filter of `base`
    (of the whole lattice by default): the non-bottom elements with exactly
    one lower cover inside the filter.

    A join-reducible element is the join of the elements strictly below it,
    so it never belongs to a minimal cover.
    '''
    if base is None:
        base = lattice.bottom
    univ = lattice.up_set(base)
    mask = 0
    for w in util.iter_bits(univ):
        if w != base \
                and util.popcount(lattice.lower_covers(w) & univ) == 1:
            mask |= util.bit(w)
    return mask


def join_irreducibles(lattice):
    ''' The join-irreducible elements. '''
    return ElementSet.from_mask(lattice, join_irreducible_mask(lattice))


def is_cover_mask(lattice, mask, base=None):
    '''
    Whether the bitset is a cover of the principal filter of `base`: nonempty,
    inside the filter, without its bottom, and joining to the top.
    '''
    if base is None:
        base = lattice.bottom
    if not mask or mask & util.bit(base) or mask & ~lattice.up_set(base):
        return False
    return lattice.join_all(mask, base) == lattice.top


def is_cover(lattice, vset):
    ''' Whether the subset is a cover. '''
    vset.check_owner(lattice)
    return is_cover_mask(lattice, vset.mask)


def refines(lattice, uset, vset):
    '''
    Whether the cover U refines the cover V, i.e., every member of U is below
    some member of V.
    '''
    for cset in (uset, vset):
        cset.check_owner(lattice)
        if not is_cover_mask(lattice, cset.mask):
            raise NotACover('covers: {} is not a cover of {}.'
                            .format(cset, lattice.name))
    return uset.mask & ~lattice.down_closure(vset.mask) == 0


def is_minimal_cover_mask(lattice, mask, base=None):
    '''
    Whether the bitset is a minimal cover of the principal filter of `base`.

    The refinements of V are exactly the covers inside the down-closure of V.
    So V is contained in all of them iff, for each member v, the down-closure
    of V without v (and without the bottom) does not join to the top.
    '''
    if base is None:
        base = lattice.bottom
    if not is_cover_mask(lattice, mask, base):
        return False
    region = lattice.down_closure(mask) & lattice.up_set(base) \
            & ~util.bit(base)
    for v in util.iter_bits(mask):
        if lattice.join_all(region & ~util.bit(v), base) == lattice.top:
            return False
    return True


@fastcache.clru_cache(maxsize=4096)
def minimal_cover_masks(lattice, base):
    '''
    Bitsets of all minimal covers of the principal filter of `base`, sorted.

    Candidates are irredundant antichains of join-irreducible elements; each
    candidate reaching the top is checked against the full definition.
    '''
    top = lattice.top
    if base == top:
        return ()

    cands = list(util.iter_bits(join_irreducible_mask(lattice, base)))
    found = []

    def _extend(start, mask, joined):
        for pos in range(start, len(cands)):
            w = cands[pos]
            if (lattice.up_set(w) | lattice.down_set(w)) & mask:
                # Not an antichain.
                continue
            if lattice.leq(w, joined):
                # Redundant.
                continue
            new_mask = mask | util.bit(w)
            new_joined = lattice.join(joined, w)
            if new_joined == top:
                if is_minimal_cover_mask(lattice, new_mask, base):
                    found.append(new_mask)
            else:
                _extend(pos + 1, new_mask, new_joined)

    _extend(0, 0, base)
    return tuple(sorted(found))


def _check_size(lattice, options):
    if len(lattice) > options.max_cover_size:
        raise SizeLimit('covers: cover enumeration is limited to {} '
                        'elements, {} has {}.'
                        .format(options.max_cover_size, lattice.name,
                                len(lattice)))


def minimal_covers(lattice, options=None):
    '''
    All minimal covers. The one-element lattice has none.
    '''
    if options is None:
        options = Option()
    _check_size(lattice, options)
    return CoverFamily.from_masks(
        lattice, minimal_cover_masks(lattice, lattice.bottom))


def all_covers(lattice, options=None):
    '''
    All covers, by exhaustive subset enumeration.
    '''
    if options is None:
        options = Option()
    _check_size(lattice, options)

    nonzero = lattice.full_mask & ~util.bit(lattice.bottom)
    joins = {0: lattice.bottom}
    masks = []
    for sub in util.iter_submasks(nonzero):
        if not sub:
            continue
        rest = sub & (sub - 1)
        joins[sub] = lattice.join(joins[rest], util.lowest_bit_index(sub))
        if joins[sub] == lattice.top:
            masks.append(sub)
    return CoverFamily.from_masks(lattice, masks)


def order_of_mask(lattice, mask):
    '''
    ord of a nonempty bitset without the bottom: the largest size of a subset
    with nonzero meet, minus one.
    '''
    members = list(util.iter_bits(mask))
    best = 0
    for size in range(1, len(members) + 1):
        if any(lattice.meet_all(util.mask_of(combo)) != lattice.bottom
               for combo in itertools.combinations(members, size)):
            best = size
        else:
            # Every larger subset has a smaller meet.
            break
    return best - 1


def subset_order(lattice, cset):
    '''
    ord(C): the k such that some k+1 members of C have a nonzero meet and any
    k+2 members meet to the bottom.
    '''
    cset.check_owner(lattice)
    if not cset.members or lattice.bottom in cset.members:
        raise InvalidSubset('covers: ord requires a nonempty subset without '
                            'the bottom, got {}.'.format(cset))
    return order_of_mask(lattice, cset.mask)
