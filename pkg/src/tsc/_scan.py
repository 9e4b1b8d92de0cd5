"""Character scanner used by the hand-written recursive descent parsers."""

from .errors import ParseError


class Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        text, n = self.text, len(self.text)
        while self.pos < n and text[self.pos].isspace():
            self.pos += 1

    def at_end(self):
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self, token):
        self.skip_ws()
        return self.text.startswith(token, self.pos)

    def accept(self, token):
        if self.peek(token):
            self.pos += len(token)
            return True
        return False

    def expect(self, token):
        if not self.accept(token):
            self.fail(f"expected {token!r}")

    def nat(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected a natural number")
        return int(self.text[start:self.pos])

    def peek_digit(self):
        self.skip_ws()
        return self.pos < len(self.text) and self.text[self.pos].isdigit()

    def fail(self, message):
        found = self.text[self.pos:self.pos + 1] or "end of input"
        raise ParseError(f"{message}, found {found!r}", self.text, self.pos)

    def finish(self):
        if not self.at_end():
            self.fail("unexpected trailing input")
