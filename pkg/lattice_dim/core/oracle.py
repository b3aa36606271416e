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

from .covers import CoverFamily
from .element_set import ElementSet
from .filters import Filter
from .lattice_error import SizeLimit
from .option import Option
from .. import util

'''
Brute-force evaluation of the dimension definitions, quantifying over all
elements and all covers. Used to cross-check the optimized algorithms on
small lattices; nothing here reuses the pruned searches.
'''

def _check_size(lattice, options):
    if options is None:
        options = Option()
    if len(lattice) > options.max_oracle_size:
        raise SizeLimit('oracle: brute force is limited to {} elements, {} '
                        'has {}.'.format(options.max_oracle_size,
                                         lattice.name, len(lattice)))


def _pseudostar(lattice, x, base):
    res = base
    for y in util.iter_bits(lattice.up_set(base)):
        if lattice.meet(x, y) == base:
            res = lattice.join(res, y)
    return res


def _cover_masks(lattice, base):
    '''
    All covers of the principal filter of `base`: nonempty subsets of the
    filter without `base` joining to the top, by subset dynamic programming.
    '''
    univ = lattice.up_set(base) & ~util.bit(base)
    joins = {0: base}
    masks = []
    for sub in util.iter_submasks(univ):
        if not sub:
            continue
        joins[sub] = lattice.join(joins[sub & (sub - 1)],
                                  util.lowest_bit_index(sub))
        if joins[sub] == lattice.top:
            masks.append(sub)
    return masks


def ind_large_def(lattice):
    '''
    Ind by the definition: Ind <= k iff for every a and every v with
    a \\/ v = 1 there is u <= v with a \\/ u = 1 and
    Ind(up(u* \\/ u)) <= k - 1.

    The smallest such k is found by iterative deepening from -1.
    '''
    memo = {}

    def _leq(base, k):
        key = (base, k)
        if key in memo:
            return memo[key]
        if base == lattice.top:
            res = k >= -1
        elif k < 0:
            res = False
        else:
            univ = list(util.iter_bits(lattice.up_set(base)))
            res = True
            for a in univ:
                for v in univ:
                    if lattice.join(a, v) != lattice.top:
                        continue
                    if not any(lattice.leq(u, v)
                               and lattice.join(a, u) == lattice.top
                               and _leq(lattice.join(
                                   _pseudostar(lattice, u, base), u), k - 1)
                               for u in univ):
                        res = False
                        break
                if not res:
                    break
        memo[key] = res
        return res

    for k in range(-1, len(lattice)):
        if _leq(lattice.bottom, k):
            return k
    raise AssertionError('oracle: Ind of {} exceeds its size.'
                         .format(lattice.name))


def ind_small_def(lattice, options=None):
    '''
    ind by the definition: ind <= k iff every cover V has a refining cover U
    with ind(up(u* \\/ u)) <= k - 1 for all u in U.
    '''
    _check_size(lattice, options)
    memo = {}
    cover_memo = {}

    def _leq(base, k):
        key = (base, k)
        if key in memo:
            return memo[key]
        if base == lattice.top:
            res = k >= -1
        elif k < 0:
            res = False
        else:
            if base not in cover_memo:
                cover_memo[base] = _cover_masks(lattice, base)
            covers = cover_memo[base]
            good = 0
            for u in util.iter_bits(lattice.up_set(base) & ~util.bit(base)):
                if _leq(lattice.join(_pseudostar(lattice, u, base), u),
                        k - 1):
                    good |= util.bit(u)
            good_covers = [c for c in covers if c & ~good == 0]
            res = True
            for vmask in covers:
                if vmask & ~good == 0:
                    # V refines itself.
                    continue
                region = lattice.down_closure(vmask)
                if not any(c & ~region == 0 for c in good_covers):
                    res = False
                    break
        memo[key] = res
        return res

    for k in range(-1, len(lattice)):
        if _leq(lattice.bottom, k):
            return k
    raise AssertionError('oracle: ind of {} exceeds its size.'
                         .format(lattice.name))


def _order_table(lattice, univ):
    '''
    ord of every subset of `univ`, from the meets of all its subsets.
    '''
    meets = {0: lattice.top}
    best = {0: -1}
    for sub in util.iter_submasks(univ):
        if not sub:
            continue
        low = util.lowest_bit_index(sub)
        meets[sub] = lattice.meet(meets[sub & (sub - 1)], low)
        if meets[sub] != lattice.bottom:
            best[sub] = util.popcount(sub) - 1
        else:
            best[sub] = max(best[sub & ~util.bit(i)]
                            for i in util.iter_bits(sub))
    return best


def dim_def(lattice, options=None):
    '''
    dim by the definition: dim <= k iff every cover C has a refining cover R
    with ord(R) <= k. The one-element lattice has dimension -1.
    '''
    _check_size(lattice, options)
    if len(lattice) == 1:
        return -1
    covers = _cover_masks(lattice, lattice.bottom)
    order = _order_table(lattice,
                         lattice.full_mask & ~util.bit(lattice.bottom))
    for k in range(len(lattice)):
        good_covers = [c for c in covers if order[c] <= k]
        if all(order[cmask] <= k
               or any(r & ~lattice.down_closure(cmask) == 0
                      for r in good_covers)
               for cmask in covers):
            return k
    raise AssertionError('oracle: dim of {} exceeds its size.'
                         .format(lattice.name))


def minimal_covers_def(lattice, options=None):
    '''
    Minimal covers by the definition: covers V contained in every cover that
    refines V.
    '''
    _check_size(lattice, options)
    covers = _cover_masks(lattice, lattice.bottom)
    cover_set = set(covers)
    nonzero = lattice.full_mask & ~util.bit(lattice.bottom)
    minimal = []
    for vmask in covers:
        region = lattice.down_closure(vmask) & nonzero
        if all(vmask & ~cmask == 0
               for cmask in util.iter_submasks(region) if cmask in cover_set):
            minimal.append(vmask)
    return CoverFamily.from_masks(lattice, minimal)


def filters_def(lattice, options=None):
    '''
    Proper filters by the definition, over all subsets: nonempty, not the
    whole lattice, upward closed and closed under meet; prime when
    x \\/ y in F forces x in F or y in F.
    '''
    _check_size(lattice, options)
    num = len(lattice)

    def _contains(mask, idx):
        return (mask >> idx) & 1

    result = []
    for mask in util.iter_submasks(lattice.full_mask):
        if not mask or mask == lattice.full_mask:
            continue
        if any(_contains(mask, x) and lattice.leq(x, y)
               and not _contains(mask, y)
               for x in range(num) for y in range(num)):
            continue
        if any(_contains(mask, x) and _contains(mask, y)
               and not _contains(mask, lattice.meet(x, y))
               for x in range(num) for y in range(num)):
            continue
        prime = not any(_contains(mask, lattice.join(x, y))
                        and not _contains(mask, x) and not _contains(mask, y)
                        for x in range(num) for y in range(num))
        result.append(Filter(lattice, ElementSet.from_mask(lattice, mask),
                             prime))
    return result
