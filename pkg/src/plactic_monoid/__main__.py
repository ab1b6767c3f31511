"""
Main entry point for the plactic monoid toolkit.
Run with: python -m plactic_monoid <verb> [words...]
"""
import multiprocessing
import sys

from plactic_monoid.components.cli import main as cli_main


def main():
    """Main entry point"""
    # Needed for frozen executables that start sweep worker processes
    multiprocessing.freeze_support()
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
