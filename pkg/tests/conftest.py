import pytest

from dendric import shifts

FIB_IMAGES = {"a": "ab", "b": "a"}
TRIB_IMAGES = {"a": "ab", "b": "ac", "c": "a"}
CHACON_IMAGES = {"a": "aabc", "b": "bc", "c": "abc"}
SPECULAR_IMAGES = {"a": "ab", "b": "cda", "c": "cd", "d": "abc"}


@pytest.fixture(scope="session")
def fib():
    return shifts.fibonacci(30)


@pytest.fixture(scope="session")
def trib():
    return shifts.tribonacci(40)


@pytest.fixture(scope="session")
def chacon():
    return shifts.chacon(30)


@pytest.fixture(scope="session")
def specular():
    return shifts.specular(20)


@pytest.fixture(scope="session")
def image():
    return shifts.tribonacci_image(60)


@pytest.fixture(scope="session")
def tails():
    return shifts.three_tails(20)
