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
"""Tests for combinatorics.periods."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from absl.testing import absltest
from absl.testing import parameterized

from multisegment_hecke.combinatorics import enumeration
from multisegment_hecke.combinatorics import multisegments
from multisegment_hecke.combinatorics import periods
from multisegment_hecke.combinatorics import segments
from multisegment_hecke.core import cuspidal_lines

Multisegment = multisegments.Multisegment
SegmentClass = segments.SegmentClass


class PeriodsTest(parameterized.TestCase):

  def test_make_period(self):
    tower = cuspidal_lines.Tower.create(1, 2)
    self.assertEqual(
        str(periods.make_period(tower, -1, 0, 1)), '2*[0,0]@sc')
    self.assertEqual(
        str(periods.make_period(tower, -1, 0, 1, r=1)), '4*[0,0]@sc')
    tower = cuspidal_lines.Tower.create(3, 2)
    self.assertEqual(
        str(periods.make_period(tower, -1, 0, 2)),
        '[0,1]@sc + [1,2]@sc + [2,3]@sc')
    self.assertEqual(
        str(periods.make_period(tower, 0, 0, 1)), '2*[0,0]@c0')

  def test_make_period_characteristic_zero(self):
    tower = cuspidal_lines.Tower.create(cuspidal_lines.INFINITY, 0)
    with self.assertRaises(ValueError):
      periods.make_period(tower, -1, 0, 1)
    m = Multisegment(tower, [(SegmentClass(tower, -1, 0, 1), 10)])
    self.assertTrue(periods.is_aperiodic(m))
    self.assertEmpty(periods.periods(m))

  def test_find_period(self):
    tower = cuspidal_lines.Tower.create(1, 2)
    point = SegmentClass(tower, -1, 0, 1)
    self.assertEqual(
        str(periods.find_period(Multisegment(tower, [(point, 2)]))),
        '2*[0,0]@sc')
    self.assertIsNone(periods.find_period(Multisegment(tower, [(point, 1)])))

  def test_periods_by_length(self):
    tower = cuspidal_lines.Tower.create(1, 2)
    m = Multisegment(tower, [(SegmentClass(tower, -1, 0, 1), 3),
                             (SegmentClass(tower, -1, 0, 2), 2),
                             (SegmentClass(tower, -1, 0, 3), 1)])
    self.assertEqual([str(p) for p in periods.periods(m)],
                     ['2*[0,0]@sc', '2*[0,1]@sc'])

  @parameterized.named_parameters(
      ('all_residues', [(-1, 0, 2), (-1, 1, 2), (-1, 2, 2)], False),
      ('missing_residue', [(-1, 0, 2), (-1, 1, 2), (-1, 1, 2)], True),
      ('mixed_lengths', [(-1, 0, 2), (-1, 1, 1), (-1, 2, 2)], True),
      ('level_below_l', [(0, 0, 1)], True),
      ('level_at_l', [(0, 0, 1), (0, 0, 1)], False),
  )
  def test_is_aperiodic_order_three(self, terms, expected):
    tower = cuspidal_lines.Tower.create(3, 2)
    m = Multisegment.from_segments(
        tower, [SegmentClass(tower, *term) for term in terms])
    self.assertEqual(periods.is_aperiodic(m), expected)

  @parameterized.parameters((1, 2), (1, 3), (2, 3), (3, 2))
  def test_adding_a_period(self, o0, ell):
    tower = cuspidal_lines.Tower.create(o0, ell)
    for m in enumeration.enumerate_by_degree(tower, 3):
      for level in (-1, 0):
        for length in (1, 2):
          period = periods.make_period(tower, level, 0, length)
          self.assertFalse(periods.is_aperiodic(m + period))
          self.assertFalse(
              periods.is_aperiodic(
                  m + periods.make_period(tower, level, 1, length, r=1)))

  def test_period_expands_like_a_level_segment(self):
    tower = cuspidal_lines.Tower.create(2, 3)
    period = periods.make_period(tower, -1, 0, 2)
    self.assertEqual(
        multisegments.ap(period),
        Multisegment.from_segments(tower, [SegmentClass(tower, 0, 0, 2)]))


if __name__ == '__main__':
  absltest.main()
