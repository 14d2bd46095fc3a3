# -*- coding: utf-8 eval: (yapf-mode 1) -*-
#
# October 18 2026
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
from __future__ import absolute_import, division, unicode_literals, print_function, nested_scopes
import collections
import logging
import threading

__date__ = 'October 18 2026'
__docformat__ = "restructuredtext en"

logger = logging.getLogger(__name__)


class _NormalFormCache(object):
    def lookup(self, key, compute, debug=False):
        raise NotImplementedError("lookup")

    def flush(self, debug=False):
        raise NotImplementedError("flush")


class NoNormalFormCache(_NormalFormCache):
    "Simple non-caching cache class"

    def __init__(self, desc=""):
        self.desc = desc

    def lookup(self, key, compute, debug=False):  # pylint: disable=W0613
        return compute()

    def flush(self, debug=False):  # pylint: disable=W0613
        return

    def __len__(self):
        return 0

    def __str__(self):
        return "NoNormalFormCache(\"{}\")".format(self.desc)


class NormalFormCache(_NormalFormCache):
    """A normal form cache.

    Normal forms of the products x_i*x^g, x^a*r and x^a*x^b are kept keyed by the
    extension's cache token and the operands. Entries beyond `max_entries` are evicted
    oldest first.

    :param desc: A description used when printing the cache.
    :param max_entries: Maximum number of normal forms to keep.
    """

    def __init__(self, desc="", max_entries=65536):
        self.desc = desc
        self.max_entries = max_entries
        self.entries = collections.OrderedDict()
        self.entries_lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def lookup(self, key, compute, debug=False):
        """Return the cached value for `key` or compute, store and return it.

        `compute` runs without the lock held; it may recurse into the cache. If two threads
        compute the same key concurrently both store equal values.
        """
        with self.entries_lock:
            try:
                value = self.entries[key]
            except KeyError:
                pass
            else:
                self.hits += 1
                return value
            self.misses += 1

        value = compute()

        with self.entries_lock:
            self.entries[key] = value
            while len(self.entries) > self.max_entries:
                evicted, unused = self.entries.popitem(last=False)
                if debug:
                    logger.debug("Evicted normal form for %s", str(evicted))
        return value

    def flush(self, debug=False):
        """Flush all cached normal forms."""
        with self.entries_lock:
            if debug:
                logger.debug("Flush: dropping %d normal forms", len(self.entries))
            self.entries.clear()
            self.hits = 0
            self.misses = 0

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        "Return a nice string for the cache object"
        return "NormalFormCache(\"{}\", max_entries={})".format(self.desc, self.max_entries)
