"""
Utility functions.

Import submodules directly (``plactic_monoid.utils.file_utils``); models depend
on ``logging_config``, so this package must not import them eagerly.
"""
