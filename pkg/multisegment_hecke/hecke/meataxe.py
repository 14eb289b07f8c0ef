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
"""Irreducibility tests for modules over `F_p`.

`is_irreducible` is the Holt-Rees form of Norton's irreducibility test: a
random element `theta` of the algebra spanned by the generator matrices is
drawn, and for each irreducible factor `f` of its characteristic polynomial
a vector killed by `f(theta)` is spun under the generators. A proper span is
a submodule. When the kernel of `f(theta)` has dimension `deg f` the test is
conclusive: a vector killed by `f(theta)^T` spinning to the whole space
under the transposes proves irreducibility.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from absl import logging
import attr
import numpy as np

from multisegment_hecke.hecke import prime_field


@attr.s(frozen=True)
class MeatAxeParams(object):
  """Parameters of `is_irreducible`.

  Attributes:
    max_trials: Number of random algebra elements tried before falling back.
      Default value: 64.
    burnside_limit: Largest dimension for which `burnside_dimension` is used.
      Default value: 12.
    confirm: Whether a positive answer is confirmed by `burnside_dimension`.
      Default value: False.
  """
  max_trials = attr.ib(default=64)
  burnside_limit = attr.ib(default=12)
  confirm = attr.ib(default=False)


def spin(vector, matrices):
  """Basis of the smallest subspace containing `vector` stable under `matrices`.

  The basis is kept in reduced row echelon form, so a candidate image is
  reduced by one product with the basis.

  Args:
    vector: A 1-D `galois.FieldArray` of length `d`.
    matrices: Iterable of `d x d` `galois.FieldArray`s.

  Returns:
    A `k x d` `galois.FieldArray` in reduced row echelon form whose rows span
    the subspace; `k = 0` when `vector` is zero.
  """
  field = type(vector)
  matrices = list(matrices)
  d = vector.shape[0]
  echelon = field.Zeros((0, d))
  pivots = []

  def reduce(candidate):
    if not pivots:
      return candidate
    return candidate - candidate[pivots] @ echelon

  def insert(candidate):
    nonzero = np.flatnonzero(prime_field.to_ints(candidate))
    pivot = int(nonzero[0])
    row = (candidate / candidate[pivot]).reshape((1, d))
    if pivots:
      cleared = echelon - echelon[:, pivot].reshape((-1, 1)) @ row
      row = np.vstack([cleared, row])
    pivots.append(pivot)
    return row

  if not np.any(prime_field.to_ints(vector)):
    return echelon
  echelon = insert(vector)
  pending = [vector]
  while pending and len(pivots) < d:
    current = pending.pop()
    for matrix in matrices:
      image = matrix @ current
      remainder = reduce(image)
      if np.any(prime_field.to_ints(remainder)):
        echelon = insert(remainder)
        pending.append(image)
        if len(pivots) == d:
          break
  return echelon


def burnside_dimension(module):
  """Dimension of the matrix algebra generated by the module's generators.

  By Burnside's theorem a module of dimension `d` over `F_p` is absolutely
  irreducible exactly when this dimension is `d^2`.
  """
  field = module.field
  d = module.dimension
  identity = np.eye(d, dtype=np.int64)
  operators = [
      prime_field.to_field(np.kron(prime_field.to_ints(matrix), identity),
                           module.p) for matrix in module.generators()
  ]
  start = field.Identity(d).reshape(d * d)
  return spin(start, operators).shape[0]


def _random_theta(generators, rng, field):
  products = [a @ b for a in generators for b in generators]
  pool = generators + products
  weights = rng.randint(0, field.order, size=len(pool))
  theta = field.Zeros(generators[0].shape)
  for weight, matrix in zip(weights, pool):
    if weight:
      theta = theta + field(int(weight)) * matrix
  return theta


def _norton_trial(theta, generators, transposes):
  """One trial: True, False, or None when inconclusive."""
  d = theta.shape[0]
  factors, _ = theta.characteristic_poly().factors()
  for factor in sorted(factors, key=lambda f: f.degree):
    evaluated = factor(theta, elementwise=False)
    kernel = evaluated.null_space()
    if not kernel.shape[0]:
      continue
    if spin(kernel[0], generators).shape[0] < d:
      return False
    if kernel.shape[0] == factor.degree:
      dual_kernel = evaluated.T.null_space()
      return spin(dual_kernel[0], transposes).shape[0] == d
  return None


def is_irreducible(module, seed=0, params=None):
  """Whether `module` is irreducible over `F_p`.

  #### Examples

  ```python
  from multisegment_hecke.hecke import modules
  module = modules.induce((1, 1), [modules.point_character(1, 2, 7),
                                   modules.point_character(3, 2, 7)])
  is_irreducible(module)  # True
  is_irreducible(modules.standard_module(0, 1, 2, 7))  # False
  ```

  Args:
    module: A `HeckeModule`.
    seed: Seed of the `np.random.RandomState` drawing algebra elements.
      Default value: 0.
    params: Optional `MeatAxeParams`.
      Default value: None, meaning `MeatAxeParams()`.

  Returns:
    A Python bool. The Burnside fallback and `params.confirm` decide
    absolute irreducibility.

  Raises:
    ValueError: if the module has dimension 0.
    RuntimeError: if every trial is inconclusive and the dimension exceeds
      `params.burnside_limit`.
  """
  params = params or MeatAxeParams()
  d = module.dimension
  if not d:
    raise ValueError('The zero module is not irreducible')
  if d == 1:
    return True
  field = module.field
  generators = module.generators()
  transposes = [matrix.T for matrix in generators]
  rng = np.random.RandomState(seed)
  for trial in range(params.max_trials):
    theta = _random_theta(generators, rng, field)
    answer = _norton_trial(theta, generators, transposes)
    logging.debug('Norton trial %d on dimension %d: %s', trial, d, answer)
    if answer is None:
      continue
    if answer and params.confirm and d <= params.burnside_limit:
      confirmed = burnside_dimension(module) == d * d
      if not confirmed:
        logging.warning(
            'Norton trial %d found an irreducible module of dimension %d '
            'that is not absolutely irreducible', trial, d)
      return confirmed
    return answer
  if d > params.burnside_limit:
    raise RuntimeError('No conclusive Norton trial in {} attempts on a module '
                       'of dimension {}'.format(params.max_trials, d))
  logging.warning(
      'No conclusive Norton trial in %d attempts; using the Burnside '
      'dimension on a module of dimension %d', params.max_trials, d)
  return burnside_dimension(module) == d * d
