import os
import shutil

import pytest
from django.conf import settings


@pytest.fixture(autouse=True)
def create_test_directories():
    path = settings.JLAMBDA_CACHE_DIR
    if not os.path.exists(path):
        os.makedirs(path)
    try:
        yield
    finally:
        shutil.rmtree(path, ignore_errors=True)
