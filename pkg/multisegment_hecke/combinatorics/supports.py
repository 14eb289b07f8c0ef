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
"""Cuspidal supports: finite multisets of points of a tower.

A point is a pair `(level, class)`: the level (-1 for the supercuspidal line)
and the class of the point on that line, an integer on a line of infinite
order and a residue modulo the order otherwise.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections

import attr

from multisegment_hecke.core import cuspidal_lines


def canonical_class(tower, level, cls):
  """Reduces the class `cls` of a point of `level` modulo the line order."""
  order = tower.level_line(level).order
  if order == cuspidal_lines.INFINITY:
    return int(cls)
  return int(cls) % order


def level_text(level):
  """Text form of a level: `sc` for -1, `c<r>` for level `r`."""
  return 'sc' if level == -1 else 'c{}'.format(level)


def _canonical_entries(entries):
  merged = collections.Counter()
  for point, count in entries:
    if count < 0:
      raise ValueError('Multiplicities must be non-negative, got {} at '
                       '{}'.format(count, point))
    merged[tuple(point)] += count
  return tuple(sorted((p, c) for p, c in merged.items() if c))


@attr.s(frozen=True)
class Support(object):
  """A finite multiset of points of a tower.

  Use `Support.from_counts` to build one: it reduces classes modulo the
  order of their line before merging.

  Attributes:
    tower: The `Tower` the points belong to.
    entries: Sorted tuple of `((level, class), multiplicity)` pairs with
      positive multiplicities.
  """
  tower = attr.ib(validator=attr.validators.instance_of(cuspidal_lines.Tower))
  entries = attr.ib(converter=_canonical_entries, default=())

  @classmethod
  def from_counts(cls, tower, counts):
    """Builds a support from a mapping or iterable of `(point, count)`."""
    if hasattr(counts, 'items'):
      counts = counts.items()
    return cls(tower, [((level, canonical_class(tower, level, c)), count)
                       for (level, c), count in counts])

  @classmethod
  def from_points(cls, tower, points):
    """Builds a support from an iterable of points, with repetition."""
    return cls.from_counts(tower, [(point, 1) for point in points])

  def counts(self):
    return collections.Counter(dict(self.entries))

  def count(self, level, cls):
    return dict(self.entries).get(
        (level, canonical_class(self.tower, level, cls)), 0)

  def points(self):
    """The points with repetition, in sorted order."""
    return [point for point, count in self.entries for _ in range(count)]

  def levels(self):
    return sorted({level for (level, _), _ in self.entries})

  def restrict(self, level):
    """The part of the support lying on `level`."""
    return Support(self.tower,
                   [(p, c) for p, c in self.entries if p[0] == level])

  @property
  def size(self):
    return sum(count for _, count in self.entries)

  @property
  def degree(self):
    return sum(count * self.tower.level_line(level).degree
               for (level, _), count in self.entries)

  @property
  def is_zero(self):
    return not self.entries

  @property
  def is_supercuspidal(self):
    return all(level == -1 for (level, _), _ in self.entries)

  def contains(self, other):
    """Whether `other` is a sub-multiset of this support."""
    mine = self.counts()
    return all(mine[point] >= count for point, count in other.entries)

  def _check_tower(self, other):
    if self.tower != other.tower:
      raise ValueError('Supports live on different towers: {} and {}'.format(
          self.tower, other.tower))

  def __add__(self, other):
    self._check_tower(other)
    return Support(self.tower, self.entries + other.entries)

  def __sub__(self, other):
    self._check_tower(other)
    counts = self.counts()
    counts.subtract(dict(other.entries))
    if any(count < 0 for count in counts.values()):
      raise ValueError('{} is not contained in {}'.format(other, self))
    return Support(self.tower, counts.items())

  def scale(self, factor):
    return Support(self.tower, [(p, c * factor) for p, c in self.entries])

  def __str__(self):
    if not self.entries:
      return '0'
    terms = []
    for (level, cls), count in self.entries:
      term = '{}@{}'.format(cls, level_text(level))
      terms.append(term if count == 1 else '{}*{}'.format(count, term))
    return ' + '.join(terms)
