import random

import pytest

from edsm import parse_eds

# seven-segment example text: n = 7, N = 20
TTA_TEXT = "{GTA}{A}{TT}{T,}{TT}{AC,ACAC,CT}{TA}"

# worked example shared by the anchor and errata tests
GROUP_P = "bbaaaabababb"
GROUP_AP = (1, 2, 4, 7, 8, 9)
GROUP_AS = (5, 6, 9, 11, 12)
GROUP_SEG = ("aaa", "bba")


@pytest.fixture
def tta_text():
    return parse_eds(TTA_TEXT)


@pytest.fixture
def rng():
    return random.Random(12345)
