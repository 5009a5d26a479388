from ._chebseq import *  # noqa: F401,F403
