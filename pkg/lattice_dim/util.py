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

'''
Element subsets are encoded as integer bitsets: bit i set means element index
i is a member.
'''


def bit(idx):
    ''' Bitset with the single element `idx`. '''
    return 1 << idx


def mask_of(indices):
    ''' Bitset of the given element indices. '''
    mask = 0
    for idx in indices:
        mask |= 1 << idx
    return mask


def iter_bits(mask):
    '''
    Iterate the element indices in the bitset `mask`, in ascending order.
    '''
    idx = 0
    while mask:
        if mask & 1:
            yield idx
        mask >>= 1
        idx += 1


def popcount(mask):
    ''' Number of elements in the bitset. '''
    return bin(mask).count('1')


def lowest_bit_index(mask):
    ''' Index of the lowest set bit. `mask` must be nonzero. '''
    return (mask & -mask).bit_length() - 1


def iter_submasks(mask):
    '''
    Iterate all subsets of the bitset `mask` in increasing integer order,
    starting from the empty set and ending with `mask` itself.

    Every subset `s` is preceded by `s & (s - 1)`, which allows dynamic
    programming over subsets in iteration order.
    '''
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def apply(func, argv):
    '''
    Similar to python2 built-in apply function.
    '''
    return func(*argv)
