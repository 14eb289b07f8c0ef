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
"""Symbolic James classification for finite general linear groups."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from multisegment_hecke.finite_gl.james_labels import count_by_scusp
from multisegment_hecke.finite_gl.james_labels import cuspidal_label
from multisegment_hecke.finite_gl.james_labels import FiniteCuspidal
from multisegment_hecke.finite_gl.james_labels import is_quotient_label
from multisegment_hecke.finite_gl.james_labels import JamesLabel
from multisegment_hecke.finite_gl.james_labels import l_label
from multisegment_hecke.finite_gl.james_labels import LabelKind
from multisegment_hecke.finite_gl.james_labels import labels_with_scusp
from multisegment_hecke.finite_gl.james_labels import st_equals_l
from multisegment_hecke.finite_gl.james_labels import st_is_cuspidal
from multisegment_hecke.finite_gl.james_labels import st_label
from multisegment_hecke.finite_gl.james_labels import st_reduction_irreducible
from multisegment_hecke.finite_gl.james_labels import subquotient_filter
from multisegment_hecke.finite_gl.james_labels import SubquotientFilter
from multisegment_hecke.finite_gl.james_labels import z_label

__all__ = [
    'count_by_scusp',
    'cuspidal_label',
    'FiniteCuspidal',
    'is_quotient_label',
    'JamesLabel',
    'l_label',
    'LabelKind',
    'labels_with_scusp',
    'st_equals_l',
    'st_is_cuspidal',
    'st_label',
    'st_reduction_irreducible',
    'subquotient_filter',
    'SubquotientFilter',
    'z_label',
]
