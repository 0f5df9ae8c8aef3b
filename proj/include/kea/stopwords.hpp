#pragma once

#include <cctype>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>

namespace kea {

inline std::string fold_ascii(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

// Case-insensitive stopword set. Files are plain text, one word per line,
// '#' starts a comment line.
class StopwordList {
 public:
  static StopwordList from_text(std::string_view text) {
    StopwordList list;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t eol = text.find('\n', pos);
      std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
      pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
      std::size_t b = line.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) continue;
      std::size_t e = line.find_last_not_of(" \t\r");
      line = line.substr(b, e - b + 1);
      if (line.empty() || line.front() == '#') continue;
      list.words_.insert(fold_ascii(line));
    }
    return list;
  }

  static StopwordList from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stopword file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    StopwordList list = from_text(text);
    if (list.empty()) throw std::runtime_error("stopword file is empty: " + path);
    return list;
  }

  // The built-in default list: 425 common English function words.
  static const StopwordList& builtin() {
    static const StopwordList list = from_text(builtin_text());
    return list;
  }

  static std::string_view builtin_text() {
    static constexpr std::string_view text = R"stop(# kea default stopword list: common English function words
# articles (3)
a
an
the
# conjunctions (36)
after
albeit
although
and
as
because
before
but
either
if
inasmuch
insofar
lest
neither
nor
once
or
provided
providing
since
so
than
that
though
till
unless
until
when
whenever
where
whereas
wherever
whether
while
whilst
yet
# prepositions (80)
aboard
about
above
across
against
along
alongside
amid
amidst
among
amongst
around
astride
at
atop
bar
barring
behind
below
beneath
beside
besides
between
beyond
by
circa
concerning
considering
despite
down
during
except
excepting
excluding
failing
following
for
from
in
including
inside
into
like
minus
near
notwithstanding
of
off
on
onto
opposite
out
outside
over
past
pending
per
plus
qua
regarding
respecting
round
save
saving
through
throughout
to
toward
towards
under
underneath
unlike
unto
up
upon
versus
via
with
within
without
# pronouns and determiners (71)
all
another
any
anybody
anyone
anything
both
each
everybody
everyone
everything
few
he
her
hers
herself
him
himself
his
i
it
its
itself
many
me
mine
more
most
much
myself
nobody
none
nothing
one
ones
oneself
other
others
our
ours
ourselves
she
some
somebody
someone
something
such
their
theirs
them
themselves
these
they
this
those
us
we
what
whatever
which
whichever
who
whoever
whom
whomever
whose
you
your
yours
yourself
yourselves
# anomalous verbs (35)
am
are
be
been
being
can
cannot
could
dare
dared
dares
did
do
does
doing
done
had
has
have
having
is
may
might
must
need
needed
needs
ought
shall
should
used
was
were
will
would
# contractions with the apostrophe dropped (45)
arent
cant
couldnt
couldve
didnt
doesnt
dont
hadnt
hasnt
havent
heres
hes
id
ill
im
isnt
itd
itll
ive
lets
mightve
mustnt
neednt
shant
shes
shouldnt
shouldve
thats
theres
theyd
theyll
theyre
theyve
wasnt
werent
weve
whats
whos
wont
wouldnt
wouldve
youd
youll
youre
youve
# adverbs (138)
abroad
accordingly
actually
afterwards
again
ago
ahead
almost
alone
already
also
altogether
always
anyhow
anymore
anyway
anywhere
apart
aside
away
awhile
back
backward
backwards
barely
beforehand
briefly
consequently
downward
downwards
due
early
else
elsewhere
enough
especially
even
eventually
ever
everywhere
exactly
fairly
far
finally
first
forth
forward
further
furthermore
hardly
hence
henceforth
here
hereafter
hereby
herein
hereupon
hither
how
however
indeed
instead
inward
just
largely
lately
later
latterly
least
less
likewise
little
maybe
meantime
meanwhile
merely
moreover
mostly
namely
nearby
nearly
never
nevertheless
next
no
nonetheless
not
now
nowadays
nowhere
often
only
onward
onwards
otherwise
overall
partly
perhaps
possibly
presently
previously
quite
rather
really
recently
respectively
seldom
shortly
similarly
simply
sometime
sometimes
somewhat
somewhere
soon
still
then
thence
there
thereafter
thereby
therefore
therein
thereupon
thus
today
together
tomorrow
too
twice
upward
upwards
very
well
whence
why
yes
yesterday
# adjectives and quantifiers (17)
certain
every
fewer
fewest
former
fourth
last
latter
main
new
own
same
second
several
third
various
whole
)stop";
    return text;
  }

  bool contains(std::string_view word) const { return words_.count(fold_ascii(word)) > 0; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

 private:
  std::unordered_set<std::string> words_;
};

}  // namespace kea
