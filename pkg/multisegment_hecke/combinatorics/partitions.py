# Copyright 2020 The Multisegment Hecke Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# Lint as: python3
"""Partitions: conjugation, dominance, addition and e-regularity.

A partition is a weakly decreasing sequence of positive integers. The
dominance order is `mu <= nu` iff every prefix sum of `mu` is at most the
corresponding prefix sum of `nu`; conjugation reverses it.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import re

import attr
import numpy as np

from multisegment_hecke.core import cuspidal_lines

# Result of `enumerate_e_regular`.
EnumerationResult = collections.namedtuple(
    'EnumerationResult',
    [
        # Tuple of `Partition`s in lexicographically descending order.
        'partitions',
        # Number of partitions listed.
        'count',
    ])

_PARTITION_RE = re.compile(r'^\(\s*(\d+(\s*,\s*\d+)*)?\s*,?\s*\)$')


def _canonical_parts(parts):
  parts = tuple(int(p) for p in parts)
  if any(p < 0 for p in parts):
    raise ValueError('Partition parts must be non-negative, got {}'.format(
        parts))
  return tuple(sorted((p for p in parts if p), reverse=True))


@attr.s(frozen=True)
class Partition(object):
  """A partition, stored with weakly decreasing positive parts.

  Zero parts are dropped and the parts are sorted on construction, so
  `Partition((1, 3, 0)) == Partition((3, 1))`.
  """
  parts = attr.ib(converter=_canonical_parts, default=())

  @classmethod
  def from_string(cls, text):
    """Parses the text form `(3,1,1)`; `()` is the empty partition."""
    if not _PARTITION_RE.match(text.strip()):
      raise ValueError('Not a partition: {!r}'.format(text))
    return cls(int(p) for p in re.findall(r'\d+', text))

  @property
  def size(self):
    return sum(self.parts)

  def __len__(self):
    return len(self.parts)

  def __iter__(self):
    return iter(self.parts)

  def __getitem__(self, index):
    return self.parts[index]

  def multiplicities(self):
    """Maps each part value to the number of times it occurs."""
    return collections.Counter(self.parts)

  def conjugate(self):
    return conjugate(self)

  def __add__(self, other):
    return add(self, other)

  def __str__(self):
    return '(' + ','.join(str(p) for p in self.parts) + ')'


def conjugate(mu):
  """The conjugate partition: `mu'_j = #{i : mu_i >= j}`."""
  if not mu.parts:
    return Partition()
  return Partition(
      sum(1 for part in mu.parts if part >= j)
      for j in range(1, mu.parts[0] + 1))


def dominates(mu, nu):
  """Returns whether `mu` is dominated by `nu`, written `mu <| nu`.

  #### Examples

  ```python
  dominates(Partition((2, 2)), Partition((3, 1)))  # True
  dominates(Partition((3, 1)), Partition((2, 2)))  # False
  ```

  Args:
    mu: A `Partition`.
    nu: A `Partition` of the same size.

  Returns:
    True iff every prefix sum of `mu` is at most that of `nu`.

  Raises:
    ValueError: if the sizes differ.
  """
  if mu.size != nu.size:
    raise ValueError('Dominance compares partitions of the same integer, '
                     'got {} and {}'.format(mu, nu))
  length = max(len(mu), len(nu))
  mu_sums = np.cumsum(list(mu.parts) + [0] * (length - len(mu)))
  nu_sums = np.cumsum(list(nu.parts) + [0] * (length - len(nu)))
  return bool(np.all(mu_sums <= nu_sums))


def add(mu, nu):
  """Componentwise sum `mu + nu`, the shorter partition padded with zeros."""
  length = max(len(mu), len(nu))
  padded_mu = list(mu.parts) + [0] * (length - len(mu))
  padded_nu = list(nu.parts) + [0] * (length - len(nu))
  return Partition(a + b for a, b in zip(padded_mu, padded_nu))


def is_e_regular(mu, e):
  """Whether every part of `mu` occurs fewer than `e` times.

  Args:
    mu: A `Partition`.
    e: Positive Python int or `INFINITY`.

  Returns:
    A Python bool. Every partition is `INFINITY`-regular.
  """
  if e == cuspidal_lines.INFINITY:
    return True
  return all(count < e for count in mu.multiplicities().values())


def _partitions(n, largest):
  if n == 0:
    yield ()
    return
  for first in range(min(n, largest), 0, -1):
    for rest in _partitions(n - first, first):
      yield (first,) + rest


def partitions_of(n):
  """Yields every partition of `n` in lexicographically descending order."""
  if n < 0:
    raise ValueError('Cannot partition a negative integer: {}'.format(n))
  for parts in _partitions(n, n):
    yield Partition(parts)


def count_partitions(n):
  return count_e_regular_by_generating_function(n, cuspidal_lines.INFINITY)


def enumerate_e_regular(n, e):
  """All `e`-regular partitions of `n`.

  #### Examples

  ```python
  enumerate_e_regular(5, 2)
  # EnumerationResult(partitions=((5), (4,1), (3,2)), count=3)
  ```

  Args:
    n: Non-negative Python int.
    e: Positive Python int or `INFINITY`.

  Returns:
    An `EnumerationResult`.
  """
  found = tuple(mu for mu in partitions_of(n) if is_e_regular(mu, e))
  return EnumerationResult(partitions=found, count=len(found))


def count_e_regular_by_generating_function(n, e):
  """Number of `e`-regular partitions of `n` from the generating function.

  The count is the coefficient of `x**n` in the product over `k >= 1` of
  `(1 - x**(e*k)) / (1 - x**k) = 1 + x**k + ... + x**(k*(e-1))`. It does not
  enumerate partitions and so serves as an independent check.

  Args:
    n: Non-negative Python int.
    e: Integer `e >= 2` or `INFINITY` (all partitions).

  Returns:
    A Python int.
  """
  coefficients = np.zeros(n + 1, dtype=np.int64)
  coefficients[0] = 1
  for k in range(1, n + 1):
    max_copies = n // k if e == cuspidal_lines.INFINITY else min(e - 1, n // k)
    updated = np.zeros_like(coefficients)
    for copies in range(max_copies + 1):
      shift = copies * k
      updated[shift:] += coefficients[:n + 1 - shift]
    coefficients = updated
  return int(coefficients[n])
