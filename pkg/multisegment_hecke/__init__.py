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
"""Exact multisegment combinatorics and affine Hecke algebra modules."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

# pylint: disable=g-import-not-at-top

_REQUIRED_NUMPY_VERSION = "1.13.3"  # pylint: disable=g-statement-before-imports


def _ensure_numpy_install():  # pylint: disable=g-statement-before-imports
  """Attempt to import numpy, and ensure its version is sufficient.

  Raises:
    ImportError: if either numpy is not importable or its version is
    inadequate.
  """
  try:
    import numpy as np
  except ImportError:
    print("\n\nFailed to import numpy. The exact linear algebra over prime "
          "fields is built on numpy and galois; please install both.\n\n")
    raise

  def _as_tuple(version):
    parts = []
    for piece in version.split(".")[:3]:
      digits = "".join(ch for ch in piece if ch.isdigit())
      parts.append(int(digits) if digits else 0)
    return tuple(parts)

  if _as_tuple(np.__version__) < _as_tuple(_REQUIRED_NUMPY_VERSION):
    raise ImportError(
        "This version of the multisegment_hecke library requires numpy "
        "version >= {required}; Detected an installation of version "
        "{present}. Please upgrade numpy to proceed.".format(
            required=_REQUIRED_NUMPY_VERSION, present=np.__version__))


_ensure_numpy_install()

from multisegment_hecke import cli
from multisegment_hecke import combinatorics
from multisegment_hecke import core
from multisegment_hecke import finite_gl
from multisegment_hecke import hecke

__all__ = [
    "cli",
    "combinatorics",
    "core",
    "finite_gl",
    "hecke",
]
