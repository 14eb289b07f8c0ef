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
"""Tests for combinatorics.enumeration."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from absl.testing import absltest
from absl.testing import parameterized

from multisegment_hecke.combinatorics import enumeration
from multisegment_hecke.combinatorics import partitions
from multisegment_hecke.combinatorics import supports
from multisegment_hecke.core import cuspidal_lines

Support = supports.Support


class EnumerationTest(parameterized.TestCase):

  def setUp(self):
    super(EnumerationTest, self).setUp()
    self.inf = cuspidal_lines.Tower.create(cuspidal_lines.INFINITY, 0)

  def test_three_consecutive_points(self):
    s = Support.from_points(self.inf, [(-1, 0), (-1, 1), (-1, 2)])
    self.assertEqual([str(m) for m in enumeration.enumerate_mult(s)], [
        '[0,2]@sc', '[0,1]@sc + [2,2]@sc', '[1,2]@sc + [0,0]@sc',
        '[0,0]@sc + [1,1]@sc + [2,2]@sc'
    ])
    self.assertEqual(enumeration.count_mult_ap(s), 4)

  def test_single_point(self):
    s = Support.from_points(self.inf, [(-1, 7)])
    self.assertEqual(enumeration.count_mult(s), 1)
    tower = cuspidal_lines.Tower.create(1, 2)
    s = Support.from_points(tower, [(0, 0)])
    self.assertEqual(
        [str(m) for m in enumeration.enumerate_mult(s)], ['[0,0]@c0'])
    self.assertEqual(enumeration.count_mult_ap(s), 1)
    self.assertEqual(enumeration.count_mult(Support(tower)), 1)

  @parameterized.parameters(1, 2, 3, 4, 5, 6)
  def test_distinct_consecutive_points(self, k):
    s = Support.from_points(self.inf, [(-1, a) for a in range(k)])
    self.assertEqual(enumeration.count_mult(s), 2**(k - 1))

  def test_every_result_has_the_support(self):
    tower = cuspidal_lines.Tower.create(3, 2)
    s = Support.from_points(tower, [(-1, 0), (-1, 1), (-1, 1), (-1, 2),
                                    (0, 0)])
    found = enumeration.enumerate_mult(s)
    self.assertLen(set(found), len(found))
    for m in found:
      self.assertEqual(m.support(), s)

  def test_aperiodic_count_example(self):
    tower = cuspidal_lines.Tower.create(1, 2)
    s = Support.from_points(tower, [(-1, 0)] * 5)
    self.assertEqual(enumeration.count_mult(s), 7)
    self.assertEqual(enumeration.count_mult_ap(s), 3)

  @parameterized.parameters(2, 3, 5)
  def test_aperiodic_count_is_regular_partition_count(self, ell):
    tower = cuspidal_lines.Tower.create(1, ell)
    for n in range(1, 13):
      s = Support.from_points(tower, [(-1, 0)] * n)
      expected = partitions.enumerate_e_regular(n, ell).count
      self.assertEqual(enumeration.count_mult_ap(s), expected)
      self.assertEqual(
          expected, partitions.count_e_regular_by_generating_function(n, ell))

  def test_enumerate_by_degree(self):
    tower = cuspidal_lines.Tower.create(1, 2)
    self.assertEqual(
        [str(m) for m in enumeration.enumerate_by_degree(tower, 2)],
        ['[0,1]@sc', '2*[0,0]@sc', '[0,0]@c0'])
    self.assertLen(
        enumeration.enumerate_by_degree(tower, 2, supercuspidal_only=True), 2)
    self.assertLen(
        enumeration.enumerate_by_degree(self.inf, 4, starts=(0,)),
        partitions.count_partitions(4))

  @parameterized.parameters((1, 2), (2, 3), (4, 3))
  def test_enumerate_by_degree_is_duplicate_free(self, o0, ell):
    tower = cuspidal_lines.Tower.create(o0, ell)
    for degree in range(1, 6):
      found = enumeration.enumerate_by_degree(tower, degree)
      self.assertLen(set(found), len(found))
      for m in found:
        self.assertEqual(m.degree, degree)


if __name__ == '__main__':
  absltest.main()
