import pytest

from uarep.model import load_fixture


@pytest.fixture(scope="session")
def cyc6():
    return load_fixture("CYC6").rep("f")


@pytest.fixture(scope="session")
def vec2():
    return load_fixture("VEC2").rep("f")


@pytest.fixture(scope="session")
def gset():
    return load_fixture("GSET").rep("f")


@pytest.fixture(scope="session")
def fixtures(cyc6, vec2, gset):
    return {"CYC6": cyc6, "VEC2": vec2, "GSET": gset}


def idx(rep, labels):
    if isinstance(labels, str):
        labels = labels.split(",") if labels else []
    return rep.algM.indices([x.strip() for x in labels])
