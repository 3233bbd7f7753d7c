APP_NAME = "spiderforge"
APP_VERSION = "0.3.0"
__version__ = APP_VERSION
