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
"""Tests for combinatorics.segments."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from absl.testing import absltest
from absl.testing import parameterized

from multisegment_hecke.combinatorics import segments
from multisegment_hecke.combinatorics import supports
from multisegment_hecke.core import cuspidal_lines

INFINITY = cuspidal_lines.INFINITY
SegmentClass = segments.SegmentClass


def _tower(order):
  if order == INFINITY:
    return cuspidal_lines.Tower.create(INFINITY, 0)
  return cuspidal_lines.Tower.create(order, 5 if order == 1 else 3)


def _pairs(order, max_total):
  """All segment pairs of total length at most `max_total` on a line."""
  tower = _tower(order)
  if order == INFINITY:
    first_starts, second_starts = [0], range(-max_total, max_total + 1)
  else:
    first_starts = second_starts = range(order)
  for length in range(1, max_total):
    for other_length in range(1, max_total - length + 1):
      for start in first_starts:
        for other_start in second_starts:
          yield (SegmentClass(tower, -1, start, length),
                 SegmentClass(tower, -1, other_start, other_length))


class SegmentsTest(parameterized.TestCase):

  def test_canonical_start(self):
    tower = cuspidal_lines.Tower.create(3, 2)
    self.assertEqual(SegmentClass(tower, -1, 5, 4).start, 2)
    self.assertEqual(SegmentClass(tower, -1, -1, 1).start, 2)
    self.assertEqual(SegmentClass(tower, 0, 7, 2).start, 0)
    self.assertEqual(
        SegmentClass.from_bounds(tower, 2, 5), SegmentClass(tower, -1, 2, 4))
    with self.assertRaises(ValueError):
      SegmentClass.from_bounds(tower, 3, 1)
    with self.assertRaises(ValueError):
      SegmentClass(tower, -1, 0, 0)

  def test_level_on_characteristic_zero_rejected(self):
    with self.assertRaises(ValueError):
      SegmentClass(_tower(INFINITY), 0, 0, 1)

  def test_support(self):
    inf_tower = _tower(INFINITY)
    self.assertEqual(
        segments.support(SegmentClass(inf_tower, -1, 0, 3)).counts(),
        {(-1, 0): 1, (-1, 1): 1, (-1, 2): 1})
    tower = cuspidal_lines.Tower.create(3, 2)
    self.assertEqual(
        segments.support(SegmentClass(tower, -1, 2, 4)).counts(),
        {(-1, 2): 2, (-1, 0): 1, (-1, 1): 1})
    tower = cuspidal_lines.Tower.create(1, 2)
    self.assertEqual(
        segments.support(SegmentClass(tower, -1, 0, 5)).counts(),
        {(-1, 0): 5})

  def test_degree(self):
    tower = cuspidal_lines.Tower.create(3, 2, degree=2)
    self.assertEqual(SegmentClass(tower, -1, 0, 4).degree, 8)
    self.assertEqual(SegmentClass(tower, 1, 0, 2).degree, 2 * 2 * 3 * 2)

  @parameterized.named_parameters(
      ('adjacent_points', INFINITY, (0, 1), (1, 1), True, True),
      ('separated_points', INFINITY, (0, 1), (2, 1), False, False),
      ('juxtaposed', INFINITY, (0, 2), (2, 2), True, True),
      ('nested', INFINITY, (0, 4), (1, 2), False, False),
      ('overlapping', INFINITY, (0, 2), (1, 2), True, True),
      ('reversed', INFINITY, (1, 1), (0, 1), False, True),
      ('order_one', 1, (0, 1), (0, 1), True, True),
      ('order_two_equal', 2, (0, 1), (0, 1), False, False),
      ('order_two_wrap', 2, (0, 2), (0, 2), True, True),
  )
  def test_precedes_and_linked(self, order, first, second, precedes, linked):
    tower = _tower(order)
    delta = SegmentClass(tower, -1, *first)
    other = SegmentClass(tower, -1, *second)
    self.assertEqual(segments.precedes(delta, other), precedes)
    self.assertEqual(segments.linked(delta, other), linked)

  def test_different_lines_never_linked(self):
    tower = cuspidal_lines.Tower.create(1, 2)
    point = SegmentClass(tower, -1, 0, 1)
    self.assertFalse(segments.linked(point, SegmentClass(tower, 0, 0, 1)))
    self.assertFalse(
        segments.linked(point, SegmentClass(tower.contragredient(), -1, 0, 1)))

  @parameterized.parameters(INFINITY, 1, 2, 3, 4)
  def test_dynamic_programme_matches_oracle(self, order):
    for delta, other in _pairs(order, 8):
      self.assertEqual(
          segments.precedes(delta, other),
          segments.precedes(
              delta, other, method=segments.LinkageMethod.EXHAUSTIVE),
          msg='{} {}'.format(delta, other))

  @parameterized.parameters(INFINITY, 1, 2, 3, 4)
  def test_linkage_symmetric(self, order):
    for delta, other in _pairs(order, 6):
      self.assertEqual(
          segments.linked(delta, other), segments.linked(other, delta))

  def test_never_linked_with_itself_on_infinite_line(self):
    tower = _tower(INFINITY)
    for start in range(-3, 4):
      for length in range(1, 6):
        delta = SegmentClass(tower, -1, start, length)
        self.assertFalse(segments.linked(delta, delta))

  @parameterized.parameters(INFINITY, 1, 2, 3, 4)
  def test_final_point_of_longer_unlinked_segment(self, order):
    for delta, other in _pairs(order, 8):
      if (segments.linked(delta, other) or delta.length < other.length or
          delta.last == other.last):
        continue
      self.assertEqual(
          segments.support(other).count(delta.level, delta.last), 0,
          msg='{} {}'.format(delta, other))

  @parameterized.parameters(INFINITY, 1, 2, 3, 4)
  def test_left_truncation_keeps_unlinked(self, order):
    for delta, other in _pairs(order, 8):
      if segments.linked(delta, other) or delta.length < other.length:
        continue
      truncated = segments.left_trunc(other)
      if truncated is not None:
        self.assertFalse(
            segments.linked(delta, truncated),
            msg='{} {}'.format(delta, other))

  def test_dual(self):
    tower = _tower(INFINITY)
    delta = SegmentClass.from_bounds(tower, 1, 3)
    dual = segments.dual(delta)
    self.assertEqual(dual, SegmentClass.from_bounds(tower.contragredient(), -3,
                                                    -1))
    self.assertEqual(segments.dual(dual), delta)

  @parameterized.parameters(INFINITY, 1, 3, 4)
  def test_dual_support_is_negated(self, order):
    tower = _tower(order)
    for start in range(4):
      for length in range(1, 6):
        delta = SegmentClass(tower, -1, start, length)
        negated = supports.Support.from_counts(
            tower.contragredient(),
            [((level, -cls), count)
             for (level, cls), count in segments.support(delta).entries])
        self.assertEqual(segments.support(segments.dual(delta)), negated)
        self.assertEqual(segments.dual(segments.dual(delta)), delta)

  def test_truncations(self):
    tower = _tower(INFINITY)
    delta = SegmentClass.from_bounds(tower, 0, 2)
    self.assertEqual(
        segments.left_trunc(delta), SegmentClass.from_bounds(tower, 1, 2))
    self.assertEqual(
        segments.right_trunc(delta), SegmentClass.from_bounds(tower, 0, 1))
    point = SegmentClass(tower, -1, 4, 1)
    self.assertIsNone(segments.left_trunc(point))
    self.assertIsNone(segments.right_trunc(point))

  def test_sc_shifts(self):
    tower = cuspidal_lines.Tower.create(1, 2)
    self.assertEqual(
        segments.sc_shifts(SegmentClass(tower, 0, 0, 1)),
        (SegmentClass(tower, -1, 0, 1),) * 2)
    tower = cuspidal_lines.Tower.create(3, 2)
    self.assertEqual(
        segments.sc_shifts(SegmentClass(tower, 0, 0, 2)),
        tuple(SegmentClass(tower, -1, a, 2) for a in range(3)))
    point = SegmentClass(tower, -1, 1, 3)
    self.assertEqual(segments.sc_shifts(point), (point,))

  def test_sc_shifts_preserve_degree(self):
    for o0, ell in ((1, 2), (1, 3), (2, 3), (3, 2), (4, 3)):
      tower = cuspidal_lines.Tower.create(o0, ell, degree=2)
      for level in range(-1, 3):
        for length in range(1, 4):
          delta = SegmentClass(tower, level, 0, length)
          self.assertEqual(
              sum(d.degree for d in segments.sc_shifts(delta)), delta.degree)

  def test_text(self):
    tower = cuspidal_lines.Tower.create(3, 2)
    self.assertEqual(str(SegmentClass(tower, -1, 5, 4)), '[2,5]@sc')
    self.assertEqual(str(SegmentClass(tower, 1, 0, 2)), '[0,1]@c1')


if __name__ == '__main__':
  absltest.main()
