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
"""Tests for hecke.bridge."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from absl.testing import absltest
from absl.testing import parameterized

from multisegment_hecke.combinatorics import segments
from multisegment_hecke.core import cuspidal_lines
from multisegment_hecke.hecke import bridge
from multisegment_hecke.hecke import prime_field


def _segment(tower, start, length):
  return segments.SegmentClass(tower, -1, start, length)


class BridgeTest(parameterized.TestCase):

  def test_xi_tower(self):
    tower = bridge.xi_tower(2, 7)
    self.assertEqual(tower.base.order, 3)
    self.assertEqual(tower.characteristic, 7)
    self.assertEqual(bridge.xi_tower(1, 3).base_e, 3)

  def test_adjacent_points(self):
    tower = bridge.xi_tower(2, 7)
    result = bridge.linkage_bridge(_segment(tower, 0, 1),
                                   _segment(tower, 1, 1), 2, 7)
    self.assertEqual(
        result, bridge.BridgeResult(linked=True, induced_irreducible=False))

  def test_self_adjacent_line(self):
    tower = bridge.xi_tower(2, 7)
    result = bridge.linkage_bridge(_segment(tower, 0, 1),
                                   _segment(tower, 3, 1), 2, 7)
    self.assertNotEqual(result.linked, result.induced_irreducible)

  def test_order_one(self):
    tower = bridge.xi_tower(1, 3)
    result = bridge.linkage_bridge(_segment(tower, 0, 1),
                                   _segment(tower, 0, 1), 1, 3)
    self.assertEqual(
        result, bridge.BridgeResult(linked=True, induced_irreducible=False))

  def test_unlinked_pair(self):
    tower = bridge.xi_tower(prime_field.element_of_order(31, 5), 31)
    result = bridge.linkage_bridge(_segment(tower, 0, 2),
                                   _segment(tower, 3, 1), 2, 31)
    self.assertEqual(
        result, bridge.BridgeResult(linked=False, induced_irreducible=True))

  def test_segment_character(self):
    tower = bridge.xi_tower(2, 7)
    module = bridge.segment_character(_segment(tower, 1, 2), 2, 7)
    self.assertEqual(module.dimension, 1)
    self.assertEqual([int(a[0, 0]) for a in module.x], [2, 4])

  def test_rejects_foreign_segments(self):
    other = cuspidal_lines.Tower.create(cuspidal_lines.INFINITY, 0)
    tower = bridge.xi_tower(2, 7)
    with self.assertRaises(ValueError):
      bridge.linkage_bridge(_segment(other, 0, 1), _segment(tower, 0, 1), 2,
                            7)
    with self.assertRaises(ValueError):
      bridge.linkage_bridge(_segment(tower, 0, 1), _segment(tower, 0, 1), 3,
                            7)

  @parameterized.named_parameters(
      ('f7_order_3', 7, 2),
      ('f7_order_2', 7, 6),
      ('f11_order_5', 11, 3),
      ('f31_order_5', 31, 2),
      ('f3_order_1', 3, 1),
  )
  def test_linkage_is_reducibility(self, p, xi):
    tower = bridge.xi_tower(xi, p)
    order = tower.base.order
    for first_length in range(1, 5):
      for second_length in range(1, 6 - first_length):
        for start in range(order):
          delta = _segment(tower, 0, first_length)
          other = _segment(tower, start, second_length)
          result = bridge.linkage_bridge(delta, other, xi, p)
          self.assertNotEqual(
              result.linked, result.induced_irreducible,
              msg='{} and {} at xi={} in F_{}'.format(delta, other, xi, p))


if __name__ == '__main__':
  absltest.main()
