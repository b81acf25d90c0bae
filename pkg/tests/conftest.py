import gzip
from pathlib import Path

import pytest

from graphsig.graphs import from_graph6

REPO_ROOT = Path(__file__).resolve().parent.parent
CONNECTED_STREAM = REPO_ROOT / "data" / "connected_1_9.g6.gz"


def stream_lines(path=CONNECTED_STREAM):
    with gzip.open(path, "rt", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                yield line


def connected_graph6(max_order: int, min_order: int = 1):
    """graph6 lines of all connected graphs with min_order <= n <= max_order.
    For n <= 62 the order is the first byte, so filtering needs no parse."""
    for line in stream_lines():
        n = ord(line[0]) - 63
        if min_order <= n <= max_order:
            yield line


@pytest.fixture(scope="session")
def connected_le7():
    return [from_graph6(t) for t in connected_graph6(7)]


@pytest.fixture(scope="session")
def connected_le6():
    return [from_graph6(t) for t in connected_graph6(6)]


@pytest.fixture(scope="session")
def stream_available():
    if not CONNECTED_STREAM.exists():
        pytest.fail(f"missing fixture {CONNECTED_STREAM}; "
                    "run scripts/generate_connected_graphs.py")
    return CONNECTED_STREAM
