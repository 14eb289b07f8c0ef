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
"""Finite-dimensional modules of the affine Hecke algebra over `F_p`.

A `HeckeModule` stores the matrices of `S_1, ..., S_{n-1}`, `X_1, ..., X_n`
and `X_1^-1, ..., X_n^-1`; the defining relations are checked when it is
built. Modules are induced with `Hom_{H_alpha}(H_n, V)`: a function `f` is
determined by its values `f(T_u)` on the minimal coset representatives `u`
of `W_alpha \\ W`, and `h` acts by `(h f)(T_u) = f(T_u h)`.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections

import attr
import galois
import numpy as np

from multisegment_hecke.hecke import algebra as algebra_lib
from multisegment_hecke.hecke import permutations
from multisegment_hecke.hecke import prime_field

# A one-dimensional module: the scalars of `S_1, ..., S_{n-1}` and of
# `X_1, ..., X_n`, as residues.
Character = collections.namedtuple('Character', ['s', 'x'])

# A character together with its multiplicity.
CharacterMultiplicity = collections.namedtuple('CharacterMultiplicity',
                                               ['character', 'multiplicity'])

# Result of `one_dim_sub_quot`.
OneDimensional = collections.namedtuple(
    'OneDimensional',
    [
        # `CharacterMultiplicity`s of the one-dimensional submodules; the
        # multiplicity is the dimension of the common eigenspace.
        'submodules',
        # `CharacterMultiplicity`s of the one-dimensional quotients.
        'quotients',
    ])


def _matrix_tuple(matrices):
  return tuple(matrices)


@attr.s(frozen=True, eq=False)
class HeckeModule(object):
  """A module of `H_n(xi)` over `F_p` given by generator matrices.

  Attributes:
    n: The rank.
    xi: The parameter, a nonzero residue modulo `p`.
    p: The prime order of the field.
    s: Tuple of the `n - 1` matrices of `S_1, ..., S_{n-1}`.
    x: Tuple of the `n` matrices of `X_1, ..., X_n`.
    x_inv: Tuple of the `n` matrices of `X_1^-1, ..., X_n^-1`.
  """
  n = attr.ib()
  xi = attr.ib()
  p = attr.ib()
  s = attr.ib(converter=_matrix_tuple)
  x = attr.ib(converter=_matrix_tuple)
  x_inv = attr.ib(converter=_matrix_tuple)

  def __attrs_post_init__(self):
    object.__setattr__(self, 'xi', prime_field.check_unit(self.xi, self.p))
    if len(self.s) != self.n - 1 or len(self.x) != self.n or len(
        self.x_inv) != self.n:
      raise ValueError('H_{} needs {} S, {} X and {} X^-1 matrices, got {}, '
                       '{} and {}'.format(self.n, self.n - 1, self.n, self.n,
                                          len(self.s), len(self.x),
                                          len(self.x_inv)))
    _check_module_relations(self)

  @classmethod
  def from_int_matrices(cls, n, xi, p, s, x, x_inv=None):
    """Builds a module from integer matrices, reduced modulo `p`.

    Args:
      n: The rank.
      xi: The parameter.
      p: A prime.
      s: Sequence of `n - 1` square integer array-likes.
      x: Sequence of `n` square integer array-likes.
      x_inv: Optional sequence of `n` integer array-likes.
        Default value: None, which inverts the `x` matrices.

    Returns:
      A `HeckeModule`.

    Raises:
      ValueError: if a relation fails or some `X_j` is singular.
    """
    s = [prime_field.to_field(a, p) for a in s]
    x = [prime_field.to_field(a, p) for a in x]
    if x_inv is None:
      for j, a in enumerate(x):
        if np.linalg.matrix_rank(a) < a.shape[0]:
          raise ValueError('X_{} acts by a singular matrix'.format(j + 1))
      x_inv = [np.linalg.inv(a) for a in x]
    else:
      x_inv = [prime_field.to_field(a, p) for a in x_inv]
    return cls(n, xi, p, s, x, x_inv)

  @property
  def field(self):
    return prime_field.field(self.p)

  @property
  def dimension(self):
    return self.x[0].shape[0]

  def generators(self):
    """The matrices of `S_1, ..., S_{n-1}, X_1, ..., X_n, X_1^-1, ...`."""
    return list(self.s) + list(self.x) + list(self.x_inv)

  def action(self, element):
    """The matrix of a `HeckeElement` of `H_n(xi)` over `F_p`."""
    if (element.algebra.n, element.algebra.xi,
        element.algebra.p) != (self.n, self.xi, self.p):
      raise ValueError('Element of {} does not act on a module of H_{}({}) '
                       'over F_{}'.format(element.algebra, self.n, self.xi,
                                          self.p))
    ints = _IntegerAction(
        [prime_field.to_ints(a) for a in self.s],
        [prime_field.to_ints(a) for a in self.x],
        [prime_field.to_ints(a) for a in self.x_inv], self.p)
    total = np.zeros((self.dimension, self.dimension), dtype=np.int64)
    for (exponents, perm), c in element.terms:
      total = (total + c * ints.monomial(exponents).dot(ints.t(perm))) % self.p
    return prime_field.to_field(total, self.p)


def _check_module_relations(module):
  """Raises `ValueError` naming the first defining relation that fails."""
  field = module.field
  d = module.dimension
  identity = field.Identity(d)
  xi = field(module.xi)
  s, x, x_inv = module.s, module.x, module.x_inv

  def require(holds, name):
    if not holds:
      raise ValueError('Relation {} fails on the module'.format(name))

  for j in range(module.n):
    require(np.array_equal(x[j] @ x_inv[j], identity),
            'X_{0} X_{0}^-1 = 1'.format(j + 1))
    for other in range(j + 1, module.n):
      require(np.array_equal(x[j] @ x[other], x[other] @ x[j]),
              'X_{} X_{} = X_{} X_{}'.format(j + 1, other + 1, other + 1,
                                             j + 1))
  for i in range(module.n - 1):
    require(
        np.array_equal((s[i] + identity) @ (s[i] - xi * identity),
                       field.Zeros((d, d))),
        '(S_{0} + 1)(S_{0} - xi) = 0'.format(i + 1))
    require(np.array_equal(s[i] @ x[i] @ s[i], xi * x[i + 1]),
            'S_{0} X_{0} S_{0} = xi X_{1}'.format(i + 1, i + 2))
    for j in range(module.n):
      if j not in (i, i + 1):
        require(np.array_equal(x[j] @ s[i], s[i] @ x[j]),
                'X_{} S_{} = S_{} X_{}'.format(j + 1, i + 1, i + 1, j + 1))
    for other in range(i + 1, module.n - 1):
      if other == i + 1:
        require(
            np.array_equal(s[i] @ s[other] @ s[i], s[other] @ s[i] @ s[other]),
            'braid S_{} S_{}'.format(i + 1, other + 1))
      else:
        require(np.array_equal(s[i] @ s[other], s[other] @ s[i]),
                'S_{} S_{} = S_{} S_{}'.format(i + 1, other + 1, other + 1,
                                               i + 1))


class _IntegerAction(object):
  """Matrices of `X^lambda` and `T_w` as `np.int64` arrays modulo `p`."""

  def __init__(self, s, x, x_inv, p):
    self._s = s
    self._x = x
    self._x_inv = x_inv
    self._p = p
    self._dimension = x[0].shape[0]
    self._t_cache = {}
    self._monomial_cache = {}

  def monomial(self, exponents):
    exponents = tuple(exponents)
    if exponents not in self._monomial_cache:
      result = np.eye(self._dimension, dtype=np.int64)
      for j, power in enumerate(exponents):
        factor = self._x[j] if power > 0 else self._x_inv[j]
        for _ in range(abs(power)):
          result = result.dot(factor) % self._p
      self._monomial_cache[exponents] = result
    return self._monomial_cache[exponents]

  def t(self, perm):
    if perm not in self._t_cache:
      result = np.eye(self._dimension, dtype=np.int64)
      for k in permutations.reduced_word(perm):
        result = result.dot(self._s[k]) % self._p
      self._t_cache[perm] = result
    return self._t_cache[perm]


def character_module(character, xi, p):
  """The one-dimensional module of a `Character`."""
  n = len(character.x)
  return HeckeModule.from_int_matrices(
      n, xi, p, [[[value]] for value in character.s],
      [[[value]] for value in character.x])


def character_of(module):
  """The `Character` of a one-dimensional module.

  Raises:
    ValueError: if the module is not one-dimensional.
  """
  if module.dimension != 1:
    raise ValueError('Expected a one-dimensional module, got dimension '
                     '{}'.format(module.dimension))
  return Character(
      s=tuple(int(a[0, 0]) for a in module.s),
      x=tuple(int(a[0, 0]) for a in module.x))


def char_z(a, b, xi, p, scale=1):
  """The character `Z(a, b)`: `S_i -> xi`, `X_j -> scale * xi^(a+j-1)`.

  #### Examples

  ```python
  character_of(char_z(0, 1, 2, 7))  # Character(s=(2,), x=(1, 2))
  ```

  Args:
    a: Python int.
    b: Python int, `b >= a`; the rank is `b - a + 1`.
    xi: The parameter.
    p: A prime.
    scale: Nonzero residue twisting the `X_j`.
      Default value: 1.

  Returns:
    A one-dimensional `HeckeModule`.

  Raises:
    ValueError: if `a > b`.
  """
  if a > b:
    raise ValueError('Z(a, b) needs a <= b, got ({}, {})'.format(a, b))
  n = b - a + 1
  scale = prime_field.check_unit(scale, p)
  return character_module(
      Character(
          s=(xi % p,) * (n - 1),
          x=tuple(scale * prime_field.power(xi, a + j, p) % p
                  for j in range(n))), xi, p)


def char_l(a, b, xi, p, scale=1):
  """The character `L(a, b)`: `S_i -> -1`, `X_j -> scale * xi^(b-j+1)`.

  #### Examples

  ```python
  character_of(char_l(0, 1, 2, 7))  # Character(s=(6,), x=(2, 1))
  ```

  Raises:
    ValueError: if `a > b`.
  """
  if a > b:
    raise ValueError('L(a, b) needs a <= b, got ({}, {})'.format(a, b))
  n = b - a + 1
  scale = prime_field.check_unit(scale, p)
  return character_module(
      Character(
          s=(p - 1,) * (n - 1),
          x=tuple(scale * prime_field.power(xi, b - j, p) % p
                  for j in range(n))), xi, p)


def point_character(z, xi, p):
  """The character of `H_1` sending `X_1` to `z`."""
  return character_module(Character(s=(), x=(int(z) % p,)), xi, p)


def z_equals_l_criterion(n, xi, p):
  """Whether `Z(a, b) = L(a, b)` for `b - a + 1 = n`.

  This holds when `n = 1`, in characteristic 2, and when `xi = -1` with `n`
  odd.
  """
  return n == 1 or p == 2 or (xi % p == p - 1 and n % 2 == 1)


def _tensor_action(alpha, factors):
  """Integer matrices of the `H_alpha` generators on the tensor product."""
  p = factors[0].p
  dims = [factor.dimension for factor in factors]
  total = int(np.prod(dims))
  s = {}
  x, x_inv = [], []
  offset = 0
  for block, (part, factor) in enumerate(zip(alpha, factors)):
    before = int(np.prod(dims[:block]))
    after = int(np.prod(dims[block + 1:]))

    def embed(matrix):
      return np.kron(
          np.kron(np.eye(before, dtype=np.int64), prime_field.to_ints(matrix)),
          np.eye(after, dtype=np.int64)) % p

    for local in range(part - 1):
      s[offset + local] = embed(factor.s[local])
    for local in range(part):
      x.append(embed(factor.x[local]))
      x_inv.append(embed(factor.x_inv[local]))
    offset += part
  identity = np.eye(total, dtype=np.int64)
  return _IntegerAction([s.get(k, identity) for k in range(offset - 1)], x,
                        x_inv, p)


def induce(alpha, factors):
  """`Hom_{H_alpha}(H_n, V_1 (x) ... (x) V_r)` for a composition `alpha`.

  The module is realised on the functions `f` of the minimal coset
  representatives `u` (see `permutations.minimal_coset_representatives`)
  with values in the tensor product, the coordinates of `f(T_u)` coming in
  the block of `u`. For a generator `g`, the block `(u, u')` of its matrix
  is the sum of `c rho(X^kappa) rho(T_v)` over the terms `c X^kappa T_w` of
  `T_u g` with `w = v u'`, `v` in `W_alpha`.

  #### Examples

  ```python
  module = induce((1, 1), [point_character(1, 2, 7),
                           point_character(3, 2, 7)])
  module.dimension  # 2
  ```

  Args:
    alpha: A composition `(n_1, ..., n_r)`.
    factors: List of `r` `HeckeModule`s, the `i`-th of rank `n_i`, with a
      common parameter and field.

  Returns:
    A `HeckeModule` of rank `sum(alpha)` and dimension the multinomial
    coefficient of `alpha` times the product of the factor dimensions.

  Raises:
    ValueError: if the ranks, parameters or fields of `factors` do not match
      `alpha`.
  """
  alpha = tuple(alpha)
  if len(alpha) != len(factors) or not factors:
    raise ValueError('Composition {} needs {} factors, got {}'.format(
        alpha, len(alpha), len(factors)))
  for part, factor in zip(alpha, factors):
    if factor.n != part:
      raise ValueError('Factor of rank {} in the slot of size {}'.format(
          factor.n, part))
  xi, p = factors[0].xi, factors[0].p
  if any((factor.xi, factor.p) != (xi, p) for factor in factors):
    raise ValueError('Factors must share xi and the field')
  if len(alpha) == 1:
    return factors[0]
  n = sum(alpha)
  algebra = algebra_lib.hecke_algebra(n, xi, p)
  local = _tensor_action(alpha, factors)
  representatives = permutations.minimal_coset_representatives(alpha)
  position = {u: index for index, u in enumerate(representatives)}
  width = local.monomial((0,) * n).shape[0]
  size = len(representatives) * width

  def matrix_of(element):
    result = np.zeros((size, size), dtype=np.int64)
    for row, u in enumerate(representatives):
      product = algebra.t(u) * element
      for (kappa, w), c in product.terms:
        v, minimal = permutations.coset_decomposition(w, alpha)
        column = position[minimal]
        block = c * local.monomial(kappa).dot(local.t(v)) % p
        rows = slice(row * width, (row + 1) * width)
        columns = slice(column * width, (column + 1) * width)
        result[rows, columns] = (result[rows, columns] + block) % p
    return result

  return HeckeModule.from_int_matrices(
      n, xi, p,
      s=[matrix_of(algebra.s(i)) for i in range(1, n)],
      x=[matrix_of(algebra.x(j)) for j in range(1, n + 1)],
      x_inv=[matrix_of(algebra.x(j, -1)) for j in range(1, n + 1)])


def standard_module(a, b, xi, p):
  """`S(a, b)`: `Hom_{H_(1,...,1)}(H_n, Z(a, b))`, of dimension `n!`."""
  if a > b:
    raise ValueError('S(a, b) needs a <= b, got ({}, {})'.format(a, b))
  n = b - a + 1
  return induce((1,) * n, [char_z(c, c, xi, p) for c in range(a, b + 1)])


def _common_eigenspaces(matrices, field, dimension):
  """Maximal common eigenspaces of `matrices`, as `(eigenvalues, basis)`.

  Each basis is a `dimension x k` matrix whose columns span the space.
  Only the roots in `F_p` of the characteristic polynomial of each matrix
  are tried as eigenvalues.
  """
  spaces = [((), field.Identity(dimension))]
  for matrix in matrices:
    eigenvalues = sorted(
        int(root) for root in matrix.characteristic_poly().roots())
    refined = []
    for values, basis in spaces:
      image = matrix @ basis
      for value in eigenvalues:
        kernel = (image - field(value) * basis).null_space()
        if kernel.shape[0]:
          refined.append((values + (value,), basis @ kernel.T))
    spaces = refined
    if not spaces:
      break
  return spaces


def _characters(module, matrices):
  found = []
  for values, basis in _common_eigenspaces(matrices, module.field,
                                           module.dimension):
    character = Character(s=values[:module.n - 1], x=values[module.n - 1:])
    found.append(CharacterMultiplicity(character, basis.shape[1]))
  return sorted(found)


def one_dim_sub_quot(module):
  """One-dimensional submodules and quotients of `module`.

  A one-dimensional submodule is spanned by a common eigenvector of the
  generator matrices; a one-dimensional quotient is a common eigenvector of
  their transposes.

  #### Examples

  ```python
  found = one_dim_sub_quot(standard_module(0, 1, 2, 7))
  found.submodules
  # [CharacterMultiplicity(character=Character(s=(2,), x=(1, 2)),
  #                        multiplicity=1)]
  found.quotients
  # [CharacterMultiplicity(character=Character(s=(6,), x=(2, 1)),
  #                        multiplicity=1)]
  ```

  Args:
    module: A `HeckeModule`.

  Returns:
    A `OneDimensional` namedtuple of sorted lists.
  """
  generators = list(module.s) + list(module.x)
  return OneDimensional(
      submodules=_characters(module, generators),
      quotients=_characters(module, [matrix.T for matrix in generators]))


def central_character(module):
  """The central character of a module on which the center acts by scalars.

  The elementary symmetric functions `e_k(X_1, ..., X_n)` are central; when
  they act by scalars `c_k`, the central character is the multiset of roots
  of `t^n - c_1 t^(n-1) + ... + (-1)^n c_n`.

  #### Examples

  ```python
  central_character(char_z(0, 2, 2, 7))  # (1, 2, 4)
  ```

  Args:
    module: A `HeckeModule`, typically irreducible.

  Returns:
    A sorted tuple of `n` nonzero residues, with repetition.

  Raises:
    ValueError: if some `e_k(X)` does not act by a scalar, or if the
      polynomial does not split over `F_p`.
  """
  field = module.field
  d = module.dimension
  identity = field.Identity(d)
  elementary = [identity] + [field.Zeros((d, d))] * module.n
  for matrix in module.x:
    for k in range(module.n, 0, -1):
      elementary[k] = elementary[k] + matrix @ elementary[k - 1]
  coefficients = [1]
  for k in range(1, module.n + 1):
    scalar = elementary[k][0, 0]
    if not np.array_equal(elementary[k], scalar * identity):
      raise ValueError(
          'e_{}(X) does not act by a scalar: the module is not absolutely '
          'irreducible over F_{}'.format(k, module.p))
    coefficients.append(int(scalar) * (-1)**k % module.p)
  polynomial = galois.Poly(coefficients, field=field)
  roots, multiplicities = polynomial.roots(multiplicity=True)
  if int(np.sum(multiplicities)) != module.n:
    raise ValueError('The central character does not split over F_{}: '
                     '{}'.format(module.p, polynomial))
  values = []
  for root, multiplicity in zip(roots, multiplicities):
    values.extend([int(root)] * int(multiplicity))
  return tuple(sorted(values))


def hom_space(module, other):
  """A basis of `Hom_{H_n}(module, other)`.

  A matrix `F` with `F rho(g) = sigma(g) F` for all generators `g` is found
  as the null space of the stacked
  `I (x) rho(g)^T - sigma(g) (x) I` acting on `F` flattened row-major.

  Returns:
    A list of `other.dimension x module.dimension` matrices over `F_p`.

  Raises:
    ValueError: if the modules have different ranks, parameters or fields.
  """
  if (module.n, module.xi, module.p) != (other.n, other.xi, other.p):
    raise ValueError('Modules of different algebras')
  d_in, d_out = module.dimension, other.dimension
  blocks = []
  for source, target in zip(module.generators(), other.generators()):
    blocks.append(
        np.kron(np.eye(d_out, dtype=np.int64),
                prime_field.to_ints(source).T) -
        np.kron(prime_field.to_ints(target), np.eye(d_in, dtype=np.int64)))
  system = prime_field.to_field(np.vstack(blocks), module.p)
  kernel = system.null_space()
  return [kernel[k].reshape((d_out, d_in)) for k in range(kernel.shape[0])]


def are_isomorphic(module, other, seed=0, trials=16):
  """Whether an invertible homomorphism `module -> other` is found.

  The basis of `hom_space` is tried first, then random combinations. For
  modules with a one-dimensional `Hom`, such as absolutely irreducible ones,
  the answer is exact.

  Args:
    module: A `HeckeModule`.
    other: A `HeckeModule`.
    seed: Seed of the `np.random.RandomState` drawing combinations.
      Default value: 0.
    trials: Number of random combinations.
      Default value: 16.

  Returns:
    A Python bool.
  """
  if module.dimension != other.dimension:
    return False
  basis = hom_space(module, other)
  if not basis:
    return False
  d = module.dimension
  candidates = list(basis)
  rng = np.random.RandomState(seed)
  field = module.field
  for _ in range(trials):
    weights = rng.randint(0, module.p, size=len(basis))
    combination = field.Zeros((d, d))
    for weight, matrix in zip(weights, basis):
      combination = combination + field(int(weight)) * matrix
    candidates.append(combination)
  return any(np.linalg.matrix_rank(matrix) == d for matrix in candidates)
