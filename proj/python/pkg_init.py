from ._bohrlab import *  # noqa: F401,F403
