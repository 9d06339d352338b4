import sys

from app import create_app


def main() -> int:
    return create_app().run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
