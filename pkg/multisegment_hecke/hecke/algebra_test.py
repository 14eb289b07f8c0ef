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
"""Tests for hecke.algebra."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from absl.testing import absltest
from absl.testing import parameterized

from multisegment_hecke.hecke import algebra as algebra_lib
from multisegment_hecke.hecke import permutations


class AlgebraTest(parameterized.TestCase):

  @parameterized.parameters((2, 7), (3, 7), (6, 7), (1, 7), (3, 13), (1, 2))
  def test_quadratic_relation(self, xi, p):
    algebra = algebra_lib.HeckeAlgebra(3, xi, p)
    for i in (1, 2):
      s = algebra.s(i)
      self.assertEqual(s * s, (xi - 1) * s + xi * algebra.one())

  def test_far_generators_commute(self):
    algebra = algebra_lib.HeckeAlgebra(4, 2, 7)
    self.assertEqual(algebra.s(1) * algebra.x(3), algebra.x(3) * algebra.s(1))
    self.assertEqual(algebra.s(1) * algebra.x(4, -2),
                     algebra.x(4, -2) * algebra.s(1))
    self.assertEqual(algebra.s(1) * algebra.s(3), algebra.s(3) * algebra.s(1))

  @parameterized.parameters((2, 7), (3, 13), (1, 5), (6, 7))
  def test_s_x_s(self, xi, p):
    algebra = algebra_lib.HeckeAlgebra(2, xi, p)
    s = algebra.s(1)
    self.assertEqual(s * algebra.x(1) * s, xi * algebra.x(2))

  def test_bernstein_relation(self):
    algebra = algebra_lib.HeckeAlgebra(2, 3, 7)
    s, x1, x2 = algebra.s(1), algebra.x(1), algebra.x(2)
    self.assertEqual(s * x1, x2 * s - 2 * x2)
    self.assertEqual(s * x2, x1 * s + 2 * x2)

  def test_normal_form_of_s_times_x(self):
    algebra = algebra_lib.HeckeAlgebra(2, 2, 7)
    product = algebra.s(1) * algebra.x(1)
    swap = (1, 0)
    self.assertEqual(product.coefficient((0, 1), swap), 1)
    self.assertEqual(product.coefficient((0, 1), (0, 1)), 6)
    self.assertLen(product.terms, 2)

  def test_braid_relation(self):
    algebra = algebra_lib.HeckeAlgebra(3, 5, 11)
    s1, s2 = algebra.s(1), algebra.s(2)
    self.assertEqual(s1 * s2 * s1, s2 * s1 * s2)
    self.assertEqual(s1 * s2 * s1, algebra.t((2, 1, 0)))

  def test_t_along_reduced_words(self):
    algebra = algebra_lib.HeckeAlgebra(3, 2, 7)
    for perm in permutations.all_permutations(3):
      product = algebra.one()
      for k in permutations.reduced_word(perm):
        product = product * algebra.s(k + 1)
      self.assertEqual(product, algebra.t(perm))

  def test_inverse_of_s(self):
    algebra = algebra_lib.HeckeAlgebra(2, 3, 7)
    s = algebra.s(1)
    # xi^-1 = 5 in F_7.
    inverse = 5 * (s - 2 * algebra.one())
    self.assertEqual(s * inverse, algebra.one())
    self.assertEqual(inverse * s, algebra.one())

  def test_twisted_derivation(self):
    self.assertEqual(algebra_lib.twisted_derivation((1, 0), 0), {(0, 1): -1})
    self.assertEqual(algebra_lib.twisted_derivation((0, 1), 0), {(0, 1): 1})
    self.assertEqual(algebra_lib.twisted_derivation((2, 2), 0), {})
    self.assertEqual(
        algebra_lib.twisted_derivation((2, 0, 5), 0),
        {(1, 1, 5): -1, (0, 2, 5): -1})
    self.assertEqual(
        algebra_lib.twisted_derivation((-1, 0), 0), {(-1, 0): 1})

  def test_laurent_monomials(self):
    algebra = algebra_lib.HeckeAlgebra(2, 2, 7)
    self.assertEqual(algebra.x(1, 3) * algebra.x(1, -3), algebra.one())
    self.assertEqual(algebra.x(1) * algebra.x(2), algebra.monomial((1, 1)))

  def test_x_generators(self):
    algebra = algebra_lib.HeckeAlgebra(3, 2, 7)
    self.assertEqual(algebra.x(1), algebra.monomial((1, 0, 0)))
    self.assertEqual(algebra.x(3, -2), algebra.monomial([0, 0, -2]))
    self.assertEqual(algebra.x(2).terms,
                     ((((0, 1, 0), (0, 1, 2)), 1),))
    self.assertEqual(algebra.x(1) * algebra.x(1, -1), algebra.one())

  def test_scalars_reduce(self):
    algebra = algebra_lib.HeckeAlgebra(2, 2, 7)
    self.assertTrue((7 * algebra.s(1)).is_zero)
    self.assertEqual(str(algebra.zero()), '0')
    self.assertEqual(str(3 * algebra.s(1)), '3*X^(0,0)*T[1,0]')
    self.assertEqual(algebra.s(1) - algebra.s(1), algebra.zero())

  def test_rejects(self):
    with self.assertRaises(ValueError):
      algebra_lib.HeckeAlgebra(2, 7, 7)
    with self.assertRaises(ValueError):
      algebra_lib.HeckeAlgebra(2, 2, 8)
    with self.assertRaises(ValueError):
      algebra_lib.HeckeAlgebra(0, 2, 7)
    algebra = algebra_lib.HeckeAlgebra(2, 2, 7)
    with self.assertRaises(ValueError):
      algebra.s(2)
    with self.assertRaises(ValueError):
      algebra.x(3)
    other = algebra_lib.HeckeAlgebra(3, 2, 7)
    with self.assertRaises(ValueError):
      algebra.s(1) * other.s(1)
    with self.assertRaises(ValueError):
      algebra.s(1) + other.s(1)

  def test_cached_algebra(self):
    self.assertIs(
        algebra_lib.hecke_algebra(3, 2, 7), algebra_lib.hecke_algebra(3, 2, 7))
    self.assertEqual(
        algebra_lib.hecke_algebra(3, 9, 7), algebra_lib.HeckeAlgebra(3, 2, 7))


if __name__ == '__main__':
  absltest.main()
