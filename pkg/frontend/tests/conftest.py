import csv
from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "data" / "golden.csv"


@pytest.fixture(scope="session")
def golden_path():
    return GOLDEN


@pytest.fixture(scope="session")
def golden_raw():
    """The fixture as raw dicts, independent of the package's own reader."""
    with open(GOLDEN, newline="") as fh:
        return list(csv.DictReader(fh))


def write_csv(path, fieldnames, dict_rows):
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=fieldnames)
        w.writeheader()
        for row in dict_rows:
            w.writerow({k: row.get(k, "") for k in fieldnames})
    return path
