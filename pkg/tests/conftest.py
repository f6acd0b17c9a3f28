import pytest

from scenedesc.tokenizer import tokenize

# Reference descriptions as printed for the first fixture image; the canonical
# ten-sentence set used across metric and linter tests.
SEEN_BDD_001 = [
    "It is clear daytime.",
    "It is a multi-lane street.",
    "A white car is driving in the ego lane nearby.",
    "It is a residential area.",
    "A crosswalk is ahead, and 1 white car is driving in the ego lane nearby.",
    "No pedestrians are on the crosswalk.",
    "3 people are on the right sidewalk, and the right lane is a bus lane.",
    "The right lane is a bus lane, and there is a bus in the right lane.",
    "Many cars are on the street, and the right lane is a bus lane.",
    "It is clear daytime, it is a multi-lane street, a crosswalk is ahead, "
    "one white car is driving in the ego lane nearby, no pedestrians are on the crosswalk, "
    "many cars are on the street, and it is a residential area.",
]


@pytest.fixture
def seen_bdd_001_refs():
    return [tokenize(text) for text in SEEN_BDD_001]
