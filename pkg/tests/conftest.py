import time

import pytest

from gl2images.catalog import load_table1, shipped_catalog
from gl2images.classifier import Classifier, compare_with_oracle
from gl2images.transform import regenerate_table1


@pytest.fixture(scope="session")
def catalog():
    return shipped_catalog()


@pytest.fixture(scope="session")
def classifier(catalog):
    return Classifier(catalog)


@pytest.fixture(scope="session")
def table1_rows():
    return load_table1()


@pytest.fixture(scope="session")
def table1_report(catalog, table1_rows):
    t0 = time.time()
    report = regenerate_table1(catalog, table1_rows)
    report.elapsed = time.time() - t0
    return report


@pytest.fixture(scope="session")
def oracle_reports(classifier):
    return compare_with_oracle(classifier)


CITED_CLASSES = [
    "37.a", "46.a", "726.b", "44.a", "176.a", "196.a", "196.b",
    "486.c", "486.d", "50.a", "50.b", "162.b", "98.a", "14.a", "19.a",
    "26.a", "54.a", "54.b", "30.a", "150.b", "80.b", "20.a", "1225.b",
    "14450.b", "121.a", "338.b", "175.b", "304.c", "432.b",
]


@pytest.fixture(scope="session")
def cited_classes():
    return list(CITED_CLASSES)
