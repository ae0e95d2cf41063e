from __future__ import annotations

import numpy as np
import pytest

from antichains.kernel import canonical_words_array, dedekind_pcoeff_compiled, lower_sizes_array
from antichains.lattice import all_downsets, canonical_word, downset_array
from antichains.pcoeff import dedekind_pcoeff
from antichains.sizes import size_of_words

from conftest import KNOWN


def test_canonical_words_match_python():
    words = downset_array(4)
    got = canonical_words_array(words, 4)
    want = [canonical_word(int(w), 4)[0] for w in all_downsets(4)]
    assert [int(x) for x in got] == want


def test_lower_sizes():
    words = downset_array(4)
    lower, classes, counts = lower_sizes_array(words, 4)
    assert len(classes) == 30 and int(counts.sum()) == KNOWN[4][0]
    for w, s in zip(all_downsets(4), lower):
        assert int(s) == size_of_words(0, w, 4)


@pytest.mark.parametrize("n", range(0, 6))
def test_compiled_matches_python(n):
    assert dedekind_pcoeff_compiled(n) == dedekind_pcoeff(n, 2) == KNOWN[n + 2][0]


def test_compiled_thread_independent():
    assert dedekind_pcoeff_compiled(5, threads=1) == dedekind_pcoeff_compiled(5, threads=2, batch=7)


def test_partial_sum_is_smaller():
    assert 0 < dedekind_pcoeff_compiled(4, max_units=5) < KNOWN[6][0]


def test_rejects_large_n():
    with pytest.raises(ValueError):
        dedekind_pcoeff_compiled(7)
