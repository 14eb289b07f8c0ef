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
"""Cuspidal lines, supercuspidal towers and the invariant e.

A cuspidal line is the orbit of a cuspidal point under its canonical
unramified twist. It is recorded by the characteristic `l` of the
coefficient field, the order `o` of the line (the number of classes on it,
possibly infinite) and the degree of its points. The invariant `e` of a line
is `l` when `o = 1`, `o` when `o >= 2` and infinite in characteristic zero.

A tower gathers a supercuspidal line (level -1) with the cuspidal lines
derived from it: the level `r >= 0` line carries the points
`St(rho, e * l**r)`, has order 1 and points of degree
`degree * e * l**r`.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import attr

# Order and `e` of lines in characteristic zero. Compares above every integer.
INFINITY = float('inf')


def is_prime(n):
  """Returns True if the Python integer `n` is a prime number."""
  if n < 2:
    return False
  divisor = 2
  while divisor * divisor <= n:
    if n % divisor == 0:
      return False
    divisor += 1
  return True


def _check_characteristic(instance, attribute, value):
  del instance
  if not isinstance(value, int) or isinstance(value, bool):
    raise ValueError('{} must be an integer, got {!r}'.format(
        attribute.name, value))
  if value != 0 and not is_prime(value):
    raise ValueError(
        'Characteristic must be 0 or a prime, got {}'.format(value))


@attr.s(frozen=True)
class Characteristic(object):
  """Characteristic of the coefficient field: 0 or a prime."""
  value = attr.ib(validator=_check_characteristic)

  @property
  def is_zero(self):
    return self.value == 0

  def __int__(self):
    return self.value

  def __str__(self):
    return str(self.value)


def as_characteristic(value):
  """Converts an integer (or a `Characteristic`) to a `Characteristic`."""
  if isinstance(value, Characteristic):
    return value
  return Characteristic(value)


def _check_order(instance, attribute, value):
  del instance
  if value == INFINITY:
    return
  if not isinstance(value, int) or isinstance(value, bool) or value < 1:
    raise ValueError('{} must be a positive integer or INFINITY, got '
                     '{!r}'.format(attribute.name, value))


def _check_degree(instance, attribute, value):
  del instance
  if not isinstance(value, int) or isinstance(value, bool) or value < 1:
    raise ValueError('{} must be a positive integer, got {!r}'.format(
        attribute.name, value))


@attr.s(frozen=True)
class CuspidalLine(object):
  """A cuspidal line.

  Attributes:
    characteristic: `Characteristic` of the coefficient field.
    order: Number of classes on the line: a positive integer, or `INFINITY`
      exactly when the characteristic is zero.
    degree: Degree of the cuspidal points on the line.
      Default value: 1.
  """
  characteristic = attr.ib(converter=as_characteristic)
  order = attr.ib(validator=_check_order)
  degree = attr.ib(default=1, validator=_check_degree)

  def __attrs_post_init__(self):
    if self.characteristic.is_zero != (self.order == INFINITY):
      raise ValueError(
          'A line has infinite order exactly in characteristic 0; got '
          'characteristic {} and order {}'.format(self.characteristic,
                                                  self.order))

  @property
  def e(self):
    return effective_e(self)

  @property
  def is_finite(self):
    return self.order != INFINITY


def effective_e(line):
  """The invariant `e` of a cuspidal line.

  #### Examples

  ```python
  effective_e(CuspidalLine(3, 1))  # 3
  effective_e(CuspidalLine(5, 4))  # 4
  effective_e(CuspidalLine(0, INFINITY))  # INFINITY
  ```

  Args:
    line: A `CuspidalLine`.

  Returns:
    `l` when the line has order 1, its order when the order is at least 2
    and `INFINITY` in characteristic 0.
  """
  if line.characteristic.is_zero:
    return INFINITY
  if line.order == 1:
    return line.characteristic.value
  return line.order


@attr.s(frozen=True)
class Tower(object):
  """A supercuspidal line together with its cuspidal levels.

  Attributes:
    base: The supercuspidal `CuspidalLine` (level -1).
    dual: Whether this is the contragredient copy of the tower. Segments of a
      tower and of its contragredient never live on the same line.
      Default value: False.
  """
  base = attr.ib(validator=attr.validators.instance_of(CuspidalLine))
  dual = attr.ib(default=False, converter=bool)

  @classmethod
  def create(cls, o0, l, degree=1, dual=False):
    """Builds the tower of a supercuspidal line of order `o0`.

    Args:
      o0: Order of the supercuspidal line. Must be `INFINITY` iff `l == 0`.
      l: Characteristic, 0 or a prime.
      degree: Degree of the supercuspidal points.
        Default value: 1.
      dual: See the class attribute.
        Default value: False.

    Returns:
      A `Tower`.
    """
    return cls(CuspidalLine(l, o0, degree), dual=dual)

  @property
  def characteristic(self):
    return self.base.characteristic.value

  @property
  def base_e(self):
    return self.base.e

  def level_line(self, level):
    """The cuspidal line at `level` (-1 for the supercuspidal line).

    Args:
      level: Python int, -1 or a level `r >= 0`.

    Returns:
      A `CuspidalLine`. Levels `r >= 0` have order 1 and points of degree
      `base.degree * e(base) * l**r`.

    Raises:
      ValueError: if `level < -1`, or if `level >= 0` in characteristic 0.
    """
    if level == -1:
      return self.base
    if level < -1:
      raise ValueError('Levels start at -1, got {}'.format(level))
    if self.base.characteristic.is_zero:
      raise ValueError(
          'A characteristic-0 tower has no cuspidal level {}'.format(level))
    return CuspidalLine(self.base.characteristic, 1,
                        self.base.degree * self.shift_count(level))

  def shift_count(self, level):
    """Number of supercuspidal shifts making up one point of `level`."""
    if level == -1:
      return 1
    if self.base.characteristic.is_zero:
      raise ValueError(
          'A characteristic-0 tower has no cuspidal level {}'.format(level))
    return self.base.e * self.characteristic**level

  def contragredient(self):
    return Tower(self.base, dual=not self.dual)

  def __str__(self):
    o0 = 'inf' if self.base.order == INFINITY else str(self.base.order)
    text = 'tower(o0={}, l={}'.format(o0, self.characteristic)
    if self.base.degree != 1:
      text += ', deg={}'.format(self.base.degree)
    if self.dual:
      text += ', dual=1'
    return text + ')'


def cuspidal_lengths(e, characteristic, n):
  """Whether `n` is a length `1` or `e * l**r` for some `r >= 0`.

  These are the `n` for which `st(sigma, n)` is cuspidal.

  #### Examples

  ```python
  cuspidal_lengths(3, 2, 6)  # True, 6 = 3 * 2
  cuspidal_lengths(3, 2, 2)  # False
  cuspidal_lengths(INFINITY, 0, 5)  # False
  ```

  Args:
    e: Positive Python int or `INFINITY`.
    characteristic: 0 or a prime (int or `Characteristic`).
    n: Positive Python int.

  Returns:
    A Python bool.
  """
  ell = as_characteristic(characteristic).value
  if n == 1:
    return True
  if ell == 0 or e == INFINITY:
    return False
  length = e
  while length <= n:
    if length == n:
      return True
    length *= ell
  return False
