"""Settings for running the jlambda commands outside of a Django project."""
import os

SECRET_KEY = "jlambda-standalone"
INSTALLED_APPS = ("jlambda",)
CACHES = {
    "default": {
        "BACKEND": "django.core.cache.backends.locmem.LocMemCache",
        "LOCATION": "jlambda",
    }
}
USE_TZ = True
JLAMBDA_THREADS = int(os.environ.get("JLAMBDA_THREADS", "0"))
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "handlers": {"console": {"class": "logging.StreamHandler"}},
    "loggers": {
        "jlambda": {
            "handlers": ["console"],
            "level": os.environ.get("JLAMBDA_LOG_LEVEL", "WARNING"),
        }
    },
}
