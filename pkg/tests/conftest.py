from functools import lru_cache

import pytest

from dgla import BUILTIN_NAMES, build_contraction, build_splitting, builtin_example


@lru_cache(maxsize=None)
def contraction_for(name):
    L = builtin_example(name)
    return L, build_contraction(L, build_splitting(L))


@pytest.fixture(params=BUILTIN_NAMES)
def corpus_case(request):
    return contraction_for(request.param)
