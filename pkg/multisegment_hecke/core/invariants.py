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
"""Numerical invariants of a cuspidal point and their propagation.

A cuspidal point carries integers `n, f, o, e, b, s`: the number of
unramified characters fixing it, the residue degree exponent (so that its
`q` is `q**f`), the order of its line, the invariant `e`, and the size of a
Galois orbit and of its stabilizer. The points `St_r(rho)` of the cuspidal
levels above a supercuspidal `rho` have invariants determined by those of
`rho`.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import attr

from multisegment_hecke.core import cuspidal_lines


def _positive(instance, attribute, value):
  del instance
  if not isinstance(value, int) or isinstance(value, bool) or value < 1:
    raise ValueError('{} must be a positive integer, got {!r}'.format(
        attribute.name, value))


def _positive_or_infinite(instance, attribute, value):
  if value == cuspidal_lines.INFINITY:
    return
  _positive(instance, attribute, value)


@attr.s(frozen=True)
class CuspidalInvariants(object):
  """Invariants `(n, f, o, e, b, s)` of a cuspidal point."""
  n = attr.ib(validator=_positive)
  f = attr.ib(validator=_positive)
  o = attr.ib(validator=_positive_or_infinite)
  e = attr.ib(validator=_positive_or_infinite)
  b = attr.ib(default=1, validator=_positive)
  s = attr.ib(default=1, validator=_positive)

  def line(self, characteristic):
    """The `CuspidalLine` of order `o` and point degree `f`."""
    return cuspidal_lines.CuspidalLine(characteristic, self.o, self.f)

  def is_consistent(self, characteristic):
    """Whether `e` follows from `(o, l)` by the rule of `effective_e`."""
    try:
      line = self.line(characteristic)
    except ValueError:
      return False
    return cuspidal_lines.effective_e(line) == self.e


def st_invariants(invariants, characteristic, r):
  """Invariants of `St_r(rho) = St(rho, e * l**r)` from those of `rho`.

  The propagation is `n' = n * o`, `f' = f * e * l**r`, `o' = 1`, `e' = l`,
  `b' = b`, `s' = s`.

  #### Examples

  ```python
  rho = CuspidalInvariants(n=2, f=1, o=3, e=3)
  st_invariants(rho, 3, 0)
  # CuspidalInvariants(n=6, f=3, o=1, e=3, b=1, s=1)
  ```

  Args:
    invariants: `CuspidalInvariants` of a supercuspidal point, with finite
      `o` and `e` consistent with `characteristic`.
    characteristic: A prime `l` (int or `Characteristic`).
    r: Non-negative Python int, the level.

  Returns:
    The `CuspidalInvariants` of the level `r` point.

  Raises:
    ValueError: in characteristic 0, if `o` is infinite, if `r < 0` or if
      `e` disagrees with `(o, l)`.
  """
  ell = cuspidal_lines.as_characteristic(characteristic).value
  if ell == 0 or invariants.o == cuspidal_lines.INFINITY:
    raise ValueError('Characteristic-0 towers have no cuspidal '
                     'non-supercuspidal level')
  if r < 0:
    raise ValueError('Level must be non-negative, got {}'.format(r))
  if not invariants.is_consistent(ell):
    raise ValueError('Invariant e={} does not follow from o={} and l={}'.format(
        invariants.e, invariants.o, ell))
  return CuspidalInvariants(
      n=invariants.n * invariants.o,
      f=invariants.f * invariants.e * ell**r,
      o=1,
      e=ell,
      b=invariants.b,
      s=invariants.s)
