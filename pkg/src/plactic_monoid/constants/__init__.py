"""
Application constants.
"""
from plactic_monoid.constants.app_constants import *
