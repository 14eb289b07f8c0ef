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
"""Prime fields `F_p` and the Hecke parameter `xi`."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import galois
import numpy as np

from multisegment_hecke.core import cuspidal_lines


def field(p):
  """The `galois.FieldArray` subclass of `F_p`.

  Raises:
    ValueError: if `p` is not a prime.
  """
  if not cuspidal_lines.is_prime(p):
    raise ValueError('Expected a prime field order, got {}'.format(p))
  return galois.GF(p)


def check_unit(xi, p):
  """Returns `xi mod p`, raising `ValueError` when it vanishes."""
  value = int(xi) % p
  if not value:
    raise ValueError('{} is not invertible modulo {}'.format(xi, p))
  return value


def power(xi, k, p):
  """`xi**k` in `F_p`; negative `k` uses the inverse of `xi`."""
  return pow(check_unit(xi, p), int(k), p)


def multiplicative_order(xi, p):
  """The order of `xi` in the multiplicative group of `F_p`."""
  value = check_unit(xi, p)
  order, current = 1, value
  while current != 1:
    current = current * value % p
    order += 1
  return order


def element_of_order(p, order):
  """The smallest element of `F_p^x` of the given multiplicative order.

  #### Examples

  ```python
  element_of_order(7, 3)  # 2
  element_of_order(31, 5)  # 2
  element_of_order(13, 4)  # 5
  ```

  Args:
    p: A prime.
    order: Positive Python int dividing `p - 1`.

  Returns:
    A Python int in `[1, p)`.

  Raises:
    ValueError: if `p` is not a prime or `order` does not divide `p - 1`.
  """
  field(p)
  if order < 1 or (p - 1) % order:
    raise ValueError('F_{} has no element of order {}'.format(p, order))
  for candidate in range(1, p):
    if multiplicative_order(candidate, p) == order:
      return candidate
  raise ValueError('F_{} has no element of order {}'.format(p, order))


def e_invariant(xi, p):
  """The `e` of `xi`: `p` when `xi = 1`, the order of `xi` otherwise.

  It is the smallest `k >= 1` with `1 + xi + ... + xi^(k-1) = 0` in `F_p`.
  """
  order = multiplicative_order(xi, p)
  return p if order == 1 else order


def xi_line(xi, p):
  """The cuspidal line of characteristic `p` and order the order of `xi`."""
  return cuspidal_lines.CuspidalLine(p, multiplicative_order(xi, p))


def to_field(values, p):
  """Integer array-like reduced modulo `p`, as an array over `F_p`."""
  return field(p)(np.mod(np.asarray(values, dtype=np.int64), p))


def to_ints(array):
  """A `galois.FieldArray` as a plain `np.int64` array."""
  return np.asarray(array.view(np.ndarray), dtype=np.int64)
