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
"""Tests for hecke.prime_field."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from absl.testing import absltest
from absl.testing import parameterized
import numpy as np

from multisegment_hecke.core import cuspidal_lines
from multisegment_hecke.hecke import prime_field


class PrimeFieldTest(parameterized.TestCase):

  def test_field_rejects_composite(self):
    with self.assertRaises(ValueError):
      prime_field.field(9)
    self.assertEqual(prime_field.field(7).order, 7)

  def test_check_unit(self):
    self.assertEqual(prime_field.check_unit(-1, 7), 6)
    with self.assertRaises(ValueError):
      prime_field.check_unit(14, 7)

  def test_power(self):
    self.assertEqual(prime_field.power(2, 3, 7), 1)
    self.assertEqual(prime_field.power(2, -1, 7), 4)
    self.assertEqual(prime_field.power(3, 0, 13), 1)

  @parameterized.parameters(
      (7, 1, 1),
      (7, 6, 2),
      (7, 2, 3),
      (7, 3, 6),
      (13, 3, 3),
      (13, 5, 4),
      (31, 2, 5),
  )
  def test_multiplicative_order(self, p, xi, order):
    self.assertEqual(prime_field.multiplicative_order(xi, p), order)

  @parameterized.parameters(
      (7, 3, 2),
      (31, 5, 2),
      (13, 4, 5),
      (11, 5, 3),
      (7, 1, 1),
  )
  def test_element_of_order(self, p, order, expected):
    self.assertEqual(prime_field.element_of_order(p, order), expected)

  def test_element_of_order_rejects(self):
    with self.assertRaises(ValueError):
      prime_field.element_of_order(7, 4)
    with self.assertRaises(ValueError):
      prime_field.element_of_order(8, 7)

  def test_e_invariant(self):
    self.assertEqual(prime_field.e_invariant(1, 7), 7)
    self.assertEqual(prime_field.e_invariant(2, 7), 3)
    self.assertEqual(prime_field.e_invariant(6, 7), 2)
    for p in (5, 7, 11):
      for xi in range(1, p):
        e = prime_field.e_invariant(xi, p)
        self.assertEqual(sum(pow(xi, k, p) for k in range(e)) % p, 0)
        for shorter in range(1, e):
          self.assertNotEqual(
              sum(pow(xi, k, p) for k in range(shorter)) % p, 0)

  def test_xi_line(self):
    line = prime_field.xi_line(2, 7)
    self.assertEqual(line.order, 3)
    self.assertEqual(line.characteristic.value, 7)
    self.assertEqual(prime_field.xi_line(1, 3).e, 3)
    self.assertIsInstance(line, cuspidal_lines.CuspidalLine)

  def test_to_field_and_back(self):
    array = prime_field.to_field([[-1, 8], [3, 14]], 7)
    np.testing.assert_array_equal(prime_field.to_ints(array),
                                  [[6, 1], [3, 0]])


if __name__ == '__main__':
  absltest.main()
