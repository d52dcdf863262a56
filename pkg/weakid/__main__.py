"""
Entry point for the weakid module
"""

from .cli import main

if __name__ == "__main__":
    main()
