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
"""The affine Hecke algebra of type A over a prime field.

`H_n` is generated by `S_1, ..., S_{n-1}` and the invertible `X_1, ..., X_n`
subject to

  * `(S_i + 1)(S_i - xi) = 0`,
  * `S_i S_j = S_j S_i` for `|i - j| >= 2`,
  * `S_i S_{i+1} S_i = S_{i+1} S_i S_{i+1}`,
  * `X_i X_j = X_j X_i`,
  * `X_j S_i = S_i X_j` for `i` not in `{j, j - 1}`,
  * `S_i X_i S_i = xi X_{i+1}`.

Elements are kept in the basis `X^lambda T_w`, where `lambda` runs over `Z^n`
and `T_w = S_{k_1} ... S_{k_l}` along the lexicographically smallest reduced
word of the permutation `w`. Products are reduced to that basis with the
commutation rule

  S_i f = (s_i f) S_i + (xi - 1) D_i(f),
  D_i(f) = X_{i+1} (f - s_i f) / (X_{i+1} - X_i),

valid for every Laurent polynomial `f` in the `X_j`.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import functools

import attr

from multisegment_hecke.hecke import permutations
from multisegment_hecke.hecke import prime_field


def _positive_int(instance, attribute, value):
  del instance
  if not isinstance(value, int) or isinstance(value, bool) or value < 1:
    raise ValueError('{} must be a positive integer, got {!r}'.format(
        attribute.name, value))


def _accumulate(target, key, value):
  target[key] = target.get(key, 0) + value


def _reduced(terms, p):
  return {key: c % p for key, c in terms.items() if c % p}


def _add_exponents(first, second):
  return tuple(a + b for a, b in zip(first, second))


def _swap(exponents, k):
  result = list(exponents)
  result[k], result[k + 1] = result[k + 1], result[k]
  return tuple(result)


def twisted_derivation(exponents, k):
  """`D_k(X^exponents)` as a mapping from exponents to integer coefficients.

  With `x = X_k`, `y = X_{k+1}` (0-based `k`) and `d = |a - b|` for the
  exponents `a`, `b` of `x`, `y`:

    * `D(x^a y^b) = -(xy)^b sum_{j<d} x^(d-1-j) y^(j+1)` when `a > b`,
    * `D(x^a y^b) = (xy)^a sum_{j<d} x^(d-1-j) y^(j+1)` when `a < b`,
    * `D(x^a y^b) = 0` when `a = b`.

  Args:
    exponents: Tuple of Python ints.
    k: 0-based index with `k + 1 < len(exponents)`.

  Returns:
    A dict from exponent tuples to Python ints.
  """
  a, b = exponents[k], exponents[k + 1]
  if a == b:
    return {}
  sign = -1 if a > b else 1
  base = min(a, b)
  result = {}
  for j in range(abs(a - b)):
    monomial = list(exponents)
    monomial[k] = base + abs(a - b) - 1 - j
    monomial[k + 1] = base + j + 1
    _accumulate(result, tuple(monomial), sign)
  return result


@attr.s(frozen=True)
class HeckeAlgebra(object):
  """The affine Hecke algebra `H_n` with parameter `xi` over `F_p`.

  Attributes:
    n: The rank, a positive Python int.
    xi: The parameter, a nonzero residue modulo `p`.
    p: The prime order of the coefficient field.
  """
  n = attr.ib(validator=_positive_int)
  xi = attr.ib()
  p = attr.ib()
  _monomial_products = attr.ib(factory=dict, init=False, eq=False,
                               repr=False)
  _t_products = attr.ib(factory=dict, init=False, eq=False, repr=False)

  def __attrs_post_init__(self):
    prime_field.field(self.p)
    object.__setattr__(self, 'xi', prime_field.check_unit(self.xi, self.p))

  def element(self, terms):
    """The element `sum c X^lambda T_w` of a mapping `{(lambda, w): c}`."""
    if hasattr(terms, 'items'):
      terms = terms.items()
    merged = {}
    for (exponents, perm), coefficient in terms:
      exponents, perm = tuple(exponents), tuple(perm)
      if len(exponents) != self.n or sorted(perm) != list(range(self.n)):
        raise ValueError('Basis index {} does not belong to H_{}'.format(
            (exponents, perm), self.n))
      _accumulate(merged, (exponents, perm), int(coefficient))
    return HeckeElement(self, tuple(sorted(_reduced(merged, self.p).items())))

  def zero(self):
    return HeckeElement(self, ())

  def one(self):
    return self.monomial((0,) * self.n)

  def monomial(self, exponents, coefficient=1):
    """`coefficient * X^exponents`."""
    return self.element({(tuple(exponents), permutations.identity(self.n)):
                         coefficient})

  def x(self, j, power=1):
    """`X_j**power`, for `1 <= j <= n`."""
    if not 1 <= j <= self.n:
      raise ValueError('X_{} is not a generator of H_{}'.format(j, self.n))
    exponents = [0] * self.n
    exponents[j - 1] = power
    return self.monomial(exponents)

  def s(self, i):
    """`S_i`, for `1 <= i <= n - 1`."""
    if not 1 <= i < self.n:
      raise ValueError('S_{} is not a generator of H_{}'.format(i, self.n))
    return self.t(permutations.right_multiply(permutations.identity(self.n),
                                              i - 1))

  def t(self, perm):
    """`T_perm`."""
    return self.element({((0,) * self.n, perm): 1})

  def _t_times_s(self, perm, k):
    """`T_perm S_{k+1}` as a mapping from permutations to coefficients."""
    swapped = permutations.right_multiply(perm, k)
    if not permutations.is_right_descent(perm, k):
      return {swapped: 1}
    return _reduced({perm: self.xi - 1, swapped: self.xi}, self.p)

  def _t_times_t(self, perm, other):
    """`T_perm T_other` as a mapping from permutations to coefficients."""
    key = (perm, other)
    if key not in self._t_products:
      current = {perm: 1}
      for k in permutations.reduced_word(other):
        following = {}
        for u, c in current.items():
          for v, d in self._t_times_s(u, k).items():
            _accumulate(following, v, c * d)
        current = _reduced(following, self.p)
      self._t_products[key] = current
    return self._t_products[key]

  def _t_times_monomial(self, perm, exponents):
    """`T_perm X^exponents` as a mapping `{(kappa, v): c}`."""
    key = (perm, exponents)
    if key in self._monomial_products:
      return self._monomial_products[key]
    descents = [k for k in range(self.n - 1)
                if permutations.is_right_descent(perm, k)]
    if not descents:
      result = {(exponents, perm): 1}
    else:
      k = descents[0]
      shorter = permutations.right_multiply(perm, k)
      result = {}
      for (kappa, v), c in self._t_times_monomial(
          shorter, _swap(exponents, k)).items():
        for u, d in self._t_times_s(v, k).items():
          _accumulate(result, (kappa, u), c * d)
      if self.xi != 1:
        for nu, c in twisted_derivation(exponents, k).items():
          for key_nu, d in self._t_times_monomial(shorter, nu).items():
            _accumulate(result, key_nu, (self.xi - 1) * c * d)
      result = _reduced(result, self.p)
    self._monomial_products[key] = result
    return result

  def multiply(self, first, second):
    """The product `first * second` in normal form.

    #### Examples

    ```python
    algebra = HeckeAlgebra(2, 2, 7)
    s = algebra.s(1)
    s * s == (algebra.xi - 1) * s + algebra.xi * algebra.one()  # True
    s * algebra.x(1) * s == algebra.xi * algebra.x(2)  # True
    ```

    Args:
      first: A `HeckeElement` of this algebra.
      second: A `HeckeElement` of this algebra.

    Returns:
      A `HeckeElement`.

    Raises:
      ValueError: if an argument belongs to another algebra.
    """
    for element in (first, second):
      if element.algebra != self:
        raise ValueError('Cannot multiply an element of {} in {}'.format(
            element.algebra, self))
    result = {}
    for (lam, w), c in first.terms:
      for (mu, v), d in second.terms:
        for (kappa, u), e in self._t_times_monomial(w, mu).items():
          exponents = _add_exponents(lam, kappa)
          for target, f in self._t_times_t(u, v).items():
            _accumulate(result, (exponents, target), c * d * e * f)
    return self.element(result)


@functools.lru_cache(maxsize=None)
def hecke_algebra(n, xi, p):
  """A cached `HeckeAlgebra(n, xi, p)` sharing its memoized products."""
  return HeckeAlgebra(n, xi % p, p)


@attr.s(frozen=True)
class HeckeElement(object):
  """An element `sum c X^lambda T_w` of a `HeckeAlgebra`.

  Build elements through the `HeckeAlgebra` methods; `terms` is a sorted
  tuple of `((lambda, w), c)` with `c` a nonzero residue.
  """
  algebra = attr.ib(validator=attr.validators.instance_of(HeckeAlgebra))
  terms = attr.ib()

  @property
  def is_zero(self):
    return not self.terms

  def coefficient(self, exponents, perm):
    return dict(self.terms).get((tuple(exponents), tuple(perm)), 0)

  def _check(self, other):
    if other.algebra != self.algebra:
      raise ValueError('Elements of {} and {} cannot be combined'.format(
          self.algebra, other.algebra))

  def __add__(self, other):
    self._check(other)
    return self.algebra.element(self.terms + other.terms)

  def __neg__(self):
    return self.algebra.element([(key, -c) for key, c in self.terms])

  def __sub__(self, other):
    return self + (-other)

  def __mul__(self, other):
    if isinstance(other, HeckeElement):
      return self.algebra.multiply(self, other)
    return self.algebra.element(
        [(key, c * int(other)) for key, c in self.terms])

  def __rmul__(self, scalar):
    return self.algebra.element(
        [(key, int(scalar) * c) for key, c in self.terms])

  def __str__(self):
    if not self.terms:
      return '0'
    pieces = []
    for (exponents, perm), c in self.terms:
      pieces.append('{}*X^({})*T[{}]'.format(
          c, ','.join(str(a) for a in exponents),
          ','.join(str(v) for v in perm)))
    return ' + '.join(pieces)

