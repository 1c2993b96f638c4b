from .builders import *  # noqa: F401,F403
