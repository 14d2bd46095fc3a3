# -*- coding: utf-8 eval: (yapf-mode 1) -*-
#
# Copyright (c) 2026, skewpbw authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

g_cache = None


def EnableGlobalCaching(max_entries=65536):
    """Enable caching of normal forms for all extensions without their own cache

    Args:
        max_entries - the number of normal forms kept before the oldest are evicted.
    """
    global g_cache
    from .cache import NormalFormCache
    g_cache = NormalFormCache("normal form global cache", max_entries)


def DisableGlobalCaching():
    """Disable caching of normal forms for all extensions without their own cache"""
    global g_cache
    from .cache import NoNormalFormCache
    g_cache.flush()
    g_cache = NoNormalFormCache("uncached normal forms")


EnableGlobalCaching()
