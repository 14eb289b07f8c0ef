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
"""Segment classes on a tower and the linkage relation.

A segment `[a, b]` on a cuspidal line is the progression of classes
`a, a + 1, ..., b`; only its class is recorded, as a start class and a
length. On a line of finite order `o` the start is a residue modulo `o`, so
on a line of order 1 every segment of a given length is the same class.

Linkage follows the subsequence definition: `delta` precedes `other` when the
sequence of classes of `delta` followed by those of `other` contains a
subsequence of consecutive classes `c, c + 1, ..., c + L - 1` with `L`
larger than both lengths. It is computed by a longest-run dynamic programme
and, for cross-checks, by trying every subsequence.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import enum
import itertools

import attr

from multisegment_hecke.combinatorics import supports
from multisegment_hecke.core import cuspidal_lines


class LinkageMethod(enum.Enum):
  """Algorithm used to decide linkage.

  * `DYNAMIC_PROGRAMMING`: longest run of consecutive classes ending at each
    position of the concatenated class sequence. Quadratic in the lengths.
  * `EXHAUSTIVE`: tries every subsequence. Exponential; used as an oracle.
  """
  DYNAMIC_PROGRAMMING = 1
  EXHAUSTIVE = 2


def _check_int(value, name, minimum):
  if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
    raise ValueError('{} must be an integer >= {}, got {!r}'.format(
        name, minimum, value))


@attr.s(frozen=True)
class SegmentClass(object):
  """The class of a segment on one level of a tower.

  Attributes:
    tower: The `Tower` the segment lives on.
    level: -1 for the supercuspidal line, `r >= 0` for the level `r` line.
    start: Class of the first point. Reduced modulo the order of the line on
      construction.
    length: Number of points, at least 1.
  """
  tower = attr.ib(validator=attr.validators.instance_of(cuspidal_lines.Tower))
  level = attr.ib()
  start = attr.ib()
  length = attr.ib()

  def __attrs_post_init__(self):
    _check_int(self.level, 'level', -1)
    _check_int(self.length, 'length', 1)
    object.__setattr__(
        self, 'start',
        supports.canonical_class(self.tower, self.level, self.start))

  @classmethod
  def from_bounds(cls, tower, a, b, level=-1):
    """The segment `[a, b]` on `level`; requires `a <= b`."""
    if a > b:
      raise ValueError('A segment [a, b] needs a <= b, got [{}, {}]'.format(
          a, b))
    return cls(tower, level, a, b - a + 1)

  @property
  def line(self):
    return self.tower.level_line(self.level)

  @property
  def order(self):
    return self.line.order

  @property
  def end(self):
    """Unreduced final index `start + length - 1`."""
    return self.start + self.length - 1

  def classes(self):
    """The classes of the points, in order."""
    return [
        supports.canonical_class(self.tower, self.level, self.start + k)
        for k in range(self.length)
    ]

  @property
  def first(self):
    return self.start

  @property
  def last(self):
    return supports.canonical_class(self.tower, self.level, self.end)

  @property
  def degree(self):
    return self.length * self.line.degree

  @property
  def sort_key(self):
    return (self.level, -self.length, self.start)

  def __str__(self):
    return '[{},{}]@{}'.format(self.start, self.end,
                               supports.level_text(self.level))


def support(delta):
  """The support of a segment: its classes, with multiplicity.

  #### Examples

  ```python
  tower = Tower.create(3, 2)
  support(SegmentClass(tower, -1, 2, 4))  # 2*2@sc + 0@sc + 1@sc
  ```

  Args:
    delta: A `SegmentClass`.

  Returns:
    A `Support` on the tower of `delta`.
  """
  return supports.Support.from_points(
      delta.tower, [(delta.level, c) for c in delta.classes()])


def _predecessor(cls, order):
  if order == cuspidal_lines.INFINITY:
    return cls - 1
  return (cls - 1) % order


def _longest_run_dynamic(sequence, order):
  best = []
  for i, cls in enumerate(sequence):
    previous = _predecessor(cls, order)
    extend = [best[j] for j in range(i) if sequence[j] == previous]
    best.append(1 + max(extend) if extend else 1)
  return max(best) if best else 0


def _is_run(subsequence, order):
  return all(
      _predecessor(subsequence[k + 1], order) == subsequence[k]
      for k in range(len(subsequence) - 1))


def _longest_run_exhaustive(sequence, order):
  for size in range(len(sequence), 0, -1):
    for positions in itertools.combinations(range(len(sequence)), size):
      if _is_run([sequence[p] for p in positions], order):
        return size
  return 0


def longest_run(sequence, order, method=LinkageMethod.DYNAMIC_PROGRAMMING):
  """Longest subsequence of consecutive classes in `sequence`.

  Args:
    sequence: List of classes on a line.
    order: Order of the line, `INFINITY` or a positive integer.
    method: `LinkageMethod`.
      Default value: `LinkageMethod.DYNAMIC_PROGRAMMING`.

  Returns:
    The length of the longest subsequence `c, c + 1, ...` (classes taken
    modulo `order` when it is finite).
  """
  if method == LinkageMethod.EXHAUSTIVE:
    return _longest_run_exhaustive(sequence, order)
  return _longest_run_dynamic(sequence, order)


def precedes(delta, other, method=LinkageMethod.DYNAMIC_PROGRAMMING):
  """Whether `delta` precedes `other`.

  Segments on different towers or levels never precede each other.

  #### Examples

  ```python
  tower = Tower.create(INFINITY, 0)
  precedes(SegmentClass(tower, -1, 0, 1), SegmentClass(tower, -1, 1, 1))
  # True
  precedes(SegmentClass(tower, -1, 1, 1), SegmentClass(tower, -1, 0, 1))
  # False
  ```

  Args:
    delta: A `SegmentClass`.
    other: A `SegmentClass`.
    method: `LinkageMethod`.
      Default value: `LinkageMethod.DYNAMIC_PROGRAMMING`.

  Returns:
    True iff the classes of `delta` followed by those of `other` contain a
    run of consecutive classes longer than both segments.
  """
  if delta.tower != other.tower or delta.level != other.level:
    return False
  run = longest_run(delta.classes() + other.classes(), delta.order, method)
  return run > max(delta.length, other.length)


def linked(delta, other, method=LinkageMethod.DYNAMIC_PROGRAMMING):
  """Whether one of the two segments precedes the other."""
  return precedes(delta, other, method) or precedes(other, delta, method)


def dual(delta):
  """The contragredient segment `[-b, -a]` on the contragredient tower."""
  return SegmentClass(delta.tower.contragredient(), delta.level, -delta.end,
                      delta.length)


def left_trunc(delta):
  """`[a + 1, b]`, or None when `delta` has length 1."""
  if delta.length == 1:
    return None
  return SegmentClass(delta.tower, delta.level, delta.start + 1,
                      delta.length - 1)


def right_trunc(delta):
  """`[a, b - 1]`, or None when `delta` has length 1."""
  if delta.length == 1:
    return None
  return SegmentClass(delta.tower, delta.level, delta.start, delta.length - 1)


def sc_shifts(delta):
  """Summands of the supercuspidal expansion of `delta`.

  A segment at level `r` expands into the `e(base) * l**r` supercuspidal
  segments `[a + k, b + k]`, `k = 0, 1, ...`, of the same length. A
  supercuspidal segment expands into itself.

  Args:
    delta: A `SegmentClass`.

  Returns:
    A tuple of supercuspidal `SegmentClass`es, with repetition.
  """
  if delta.level == -1:
    return (delta,)
  count = delta.tower.shift_count(delta.level)
  return tuple(
      SegmentClass(delta.tower, -1, delta.start + k, delta.length)
      for k in range(count))
