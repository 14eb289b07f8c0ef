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
"""James labels of the irreducible subquotients of `sigma x ... x sigma`.

For a cuspidal representation `sigma` of a finite general linear group, the
irreducible subquotients of `sigma x ... x sigma` (n factors) are labelled
`z(sigma, mu)` by the partitions `mu` of `n`. The family
`st(sigma, n) = z(sigma, (1, ..., 1))` carries the cuspidal
non-supercuspidal representations, and `l(sigma, n)` is the unique
irreducible quotient. The labels here are symbolic: no representation of a
finite group is built.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import enum

import attr

from multisegment_hecke.combinatorics import partitions
from multisegment_hecke.core import cuspidal_lines

INFINITY = cuspidal_lines.INFINITY


class LabelKind(enum.Enum):
  """Family of a `JamesLabel`.

  * `Z`: `z(sigma, mu)`, the subquotient whose Hecke module is attached to
    `mu`; `st(sigma, n)` is the shape `(1, ..., 1)`.
  * `L`: `l(sigma, n)`, the irreducible quotient attached to the sign
    character, for `n >= e(sigma)` where it differs from `st(sigma, n)`.
  """
  Z = 'z'
  L = 'l'


def _check_e(instance, attribute, value):
  del instance
  if value == INFINITY:
    return
  if not isinstance(value, int) or isinstance(value, bool) or value < 2:
    raise ValueError('{} must be an integer >= 2 or INFINITY, got '
                     '{!r}'.format(attribute.name, value))


@attr.s(frozen=True)
class FiniteCuspidal(object):
  """A cuspidal representation `sigma` of a finite general linear group.

  Attributes:
    label: Hashable identifier distinguishing non-isomorphic `sigma`.
    e: `e(sigma)`, the smallest `k >= 1` with `1 + q^m + ... + q^{m(k-1)}`
      vanishing in the coefficient field; `INFINITY` in characteristic 0.
    characteristic: The `Characteristic` of the coefficient field.
    supercuspidal: Whether `sigma` is supercuspidal.
      Default value: True.
  """
  label = attr.ib()
  e = attr.ib(validator=_check_e)
  characteristic = attr.ib(converter=cuspidal_lines.as_characteristic)
  supercuspidal = attr.ib(default=True)

  def __attrs_post_init__(self):
    if self.characteristic.is_zero != (self.e == INFINITY):
      raise ValueError(
          'e(sigma) is INFINITY exactly in characteristic 0, got e={} in '
          'characteristic {}'.format(self.e, self.characteristic))


def _as_partition(value):
  if isinstance(value, partitions.Partition):
    return value
  return partitions.Partition(value)


@attr.s(frozen=True)
class JamesLabel(object):
  """The label of an irreducible subquotient of `sigma x ... x sigma`.

  Attributes:
    base: The `FiniteCuspidal` `sigma`.
    shape: The `Partition` of the number of factors.
    kind: A `LabelKind`.
      Default value: `LabelKind.Z`.
  """
  base = attr.ib(validator=attr.validators.instance_of(FiniteCuspidal))
  shape = attr.ib(converter=_as_partition)
  kind = attr.ib(default=LabelKind.Z, converter=LabelKind)

  @property
  def n(self):
    return self.shape.size

  @property
  def is_supercuspidal(self):
    return (self.kind == LabelKind.Z and self.base.supercuspidal and
            self.shape == partitions.Partition((1,)))

  def __str__(self):
    if self.kind == LabelKind.L:
      return 'l({}, {})'.format(self.base.label, self.n)
    return 'z({}, {})'.format(self.base.label, self.shape)


def z_label(sigma, mu):
  """`z(sigma, mu)`."""
  return JamesLabel(sigma, mu)


def st_label(sigma, n):
  """`st(sigma, n) = z(sigma, (1, ..., 1))`."""
  return JamesLabel(sigma, (1,) * n)


def st_equals_l(sigma, n):
  """Whether `l(sigma, n) = st(sigma, n)`, that is whether `n < e(sigma)`."""
  return n < sigma.e


def l_label(sigma, n):
  """`l(sigma, n)`, the unique irreducible quotient of `sigma^{x n}`.

  Returns:
    `st_label(sigma, n)` when `n < e(sigma)`, otherwise a label of kind
    `LabelKind.L`.
  """
  if st_equals_l(sigma, n):
    return st_label(sigma, n)
  return JamesLabel(sigma, (1,) * n, kind=LabelKind.L)


def st_is_cuspidal(sigma, n):
  """Whether `st(sigma, n)` is cuspidal: `n = 1` or `n = e(sigma) * l**r`.

  #### Examples

  ```python
  sigma = FiniteCuspidal('s', 3, 2)
  st_is_cuspidal(sigma, 3)  # True
  st_is_cuspidal(sigma, 4)  # False
  ```
  """
  return cuspidal_lines.cuspidal_lengths(sigma.e, sigma.characteristic, n)


def cuspidal_label(sigma, r):
  """`st_r(sigma) = st(sigma, e(sigma) * l**r)`.

  The map `(sigma, r) -> st_r(sigma)` is a bijection from pairs of a
  supercuspidal `sigma` and `r >= 0` onto the cuspidal non-supercuspidal
  labels.

  Args:
    sigma: A supercuspidal `FiniteCuspidal` of nonzero characteristic.
    r: Non-negative Python int.

  Returns:
    A `JamesLabel`.

  Raises:
    ValueError: if `sigma` is not supercuspidal, has characteristic 0, or if
      `r < 0`.
  """
  if not sigma.supercuspidal:
    raise ValueError('{} is not supercuspidal'.format(sigma.label))
  if sigma.characteristic.is_zero:
    raise ValueError('Characteristic 0 has no cuspidal non-supercuspidal '
                     'representations')
  if r < 0:
    raise ValueError('r must be non-negative, got {}'.format(r))
  return st_label(sigma, sigma.e * sigma.characteristic.value**r)


def is_quotient_label(mu, sigma):
  """Whether `z(sigma, mu)` is a quotient of `sigma^{x n}`.

  This holds exactly when `mu` is `e(sigma)`-regular.
  """
  return partitions.is_e_regular(_as_partition(mu), sigma.e)


def st_reduction_irreducible(sigma, n):
  """Whether the reduction of a lift of `st(sigma, n)` is irreducible.

  Args:
    sigma: A `FiniteCuspidal` of nonzero characteristic.
    n: Positive Python int.

  Returns:
    True iff `n < e(sigma)`.
  """
  return n < sigma.e


@attr.s(frozen=True)
class SubquotientFilter(object):
  """Shapes of the subquotients of `z(sigma, mu_1) x ... x z(sigma, mu_r)`.

  Every subquotient is a `z(sigma, nu)` with `mu <| nu`, and `z(sigma, mu)`
  itself occurs with multiplicity one.

  #### Examples

  ```python
  accept = SubquotientFilter(Partition((2, 2)))
  [str(nu) for nu in accept.admitted()]  # ['(4)', '(3,1)', '(2,2)']
  ```

  Attributes:
    shape: The `Partition` `mu`.
  """
  shape = attr.ib(converter=_as_partition)

  def __call__(self, nu):
    nu = _as_partition(nu)
    return (nu.size == self.shape.size and
            partitions.dominates(self.shape, nu))

  def admitted(self):
    """The admitted shapes, in lexicographically descending order."""
    return [nu for nu in partitions.partitions_of(self.shape.size) if self(nu)]

  def multiplicity_one(self, nu):
    """Whether `nu` is known to occur exactly once, that is `nu == mu`."""
    return _as_partition(nu) == self.shape


def subquotient_filter(mu):
  return SubquotientFilter(mu)


def labels_with_scusp(sigma, n):
  """The labels of supercuspidal support `n [sigma]`, for supercuspidal `sigma`.

  Raises:
    ValueError: if `sigma` is not supercuspidal.
  """
  if not sigma.supercuspidal:
    raise ValueError('{} is not supercuspidal'.format(sigma.label))
  return [z_label(sigma, mu) for mu in partitions.partitions_of(n)]


def count_by_scusp(n):
  """Number of irreducible labels of supercuspidal support `n [sigma]`."""
  return partitions.count_partitions(n)
