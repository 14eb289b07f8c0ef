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
"""Partitions, segments, multisegments and their enumeration."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from multisegment_hecke.combinatorics import enumeration
from multisegment_hecke.combinatorics import multisegments
from multisegment_hecke.combinatorics import partitions
from multisegment_hecke.combinatorics import periods
from multisegment_hecke.combinatorics import segments
from multisegment_hecke.combinatorics import supports
from multisegment_hecke.combinatorics.multisegments import Multisegment
from multisegment_hecke.combinatorics.partitions import Partition
from multisegment_hecke.combinatorics.segments import LinkageMethod
from multisegment_hecke.combinatorics.segments import SegmentClass
from multisegment_hecke.combinatorics.supports import Support

__all__ = [
    'enumeration',
    'LinkageMethod',
    'Multisegment',
    'multisegments',
    'Partition',
    'partitions',
    'periods',
    'SegmentClass',
    'segments',
    'Support',
    'supports',
]
