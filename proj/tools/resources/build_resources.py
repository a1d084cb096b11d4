#!/usr/bin/env python3
"""Regenerates the shipped lexical resources under core/resources/.

Inputs come from the pattern3 3.0.0 source distribution (BSD-3 code, PDDL
sentiment lexicon, OANC tagged sample):

    pip download --no-deps --no-binary :all: pattern3==3.0.0
    tar xzf pattern3-3.0.0.tar.gz
    python3 tools/resources/build_resources.py pattern3-3.0.0 core/resources

Outputs:
    training/oanc-tagged.tsv  token<TAB>tag, blank line between sentences
    frequency.tsv             per-million word frequencies from the same sample
    sentiment.tsv             integer strengths, boosters, negators
    categories.dic            open word-category lexicon
    closed_class.tsv          closed-class words forced to a single tag
    stopwords.txt             English function-word list

The word lists below are curated by hand; only the tagged sample and the
adjective polarities are taken from pattern3.
"""

import argparse
import collections
import hashlib
import math
import pathlib
import re
import sys
import xml.etree.ElementTree as ET

# ---------------------------------------------------------------------------
# Category lexicon

CATEGORIES = collections.OrderedDict()

CATEGORIES["analytic"] = """
a an the of in on at by for from with into onto upon about above below between
among through during before after against within without under over toward
towards across along beyond throughout therefore thus hence consequently
furthermore moreover accordingly whereas nevertheless nonetheless analys* analyz*
data evidence percent* statistic* research* stud* report* according
""".split()

CATEGORIES["insight"] = """
think thinks thinking thought thoughts know knew known knows knowing consider*
realiz* realis* understand* understood believ* aware* idea ideas reason reasons
reasoning learn* discover* recogni* conclu* decid* decision* explain* explanation*
figur* insight* meaning* notic* perceiv* percept* rational* reflect* remember*
solution* sense wonder* feel feels felt feeling* find finds found
""".split()

CATEGORIES["cause"] = """
because cause* caus* effect* affect affected affects result* reason reasons
hence therefore thus consequen* lead leads led due since so origin* produc*
depend* trigger* influenc* impact* basis based why how make makes made
""".split()

CATEGORIES["discrep"] = """
should would could ought must need needs needed needing want wants wanted wanting
wish* hope hoped hopes hoping expect* lack* ideal* prefer* desir* mistak* rather
shouldn't wouldn't couldn't if
""".split()

CATEGORIES["tentat"] = """
maybe perhaps guess* might possib* probabl* seem* appear appears appeared apparent*
somewhat unclear unsure approximat* alleged* reportedly sometimes almost whether
may dunno depend* doubt* hypothe* indefinit* likely unlikely presum* questionab*
suppos* tentativ* theor* uncertain* vague* something someone somebody somewhere
kinda sorta or
""".split()

CATEGORIES["certain"] = """
always never definite* certain* absolute* clear clearly obvious* undoubted* truly
true fact facts complete completely total totally sure surely indeed everything
everyone everybody entire* guarantee* confirm* prove proven proves proof
undeniab* unquestionab* inevitab* essential* forever must
""".split()

CATEGORIES["differ"] = """
but however although though except unless whereas instead otherwise yet else
different* differ* unlike despite actually not n't no contrast* versus vs
alternative* opposite* distinct*
""".split()

CATEGORIES["affil"] = """
ally allies allied friend* team* partner* family families together communit*
we us our ours ourselves join* member* group* colleague* union* help* support*
cooperat* collaborat* unite* united share* sharing social* neighbor* neighbour*
companion* buddy buddies love loved loving
""".split()

CATEGORIES["power"] = """
boss* leader* lead president* power* control* govern* authorit* command* senator*
congress* official* chief* king* queen* dominat* superior* elite* order* force*
military army police court* judge* law laws regulat* administration* rule ruled
ruler* ruling strong* weak* obey* demand* threat* defeat* win won victor*
important* influen* status rank* top
""".split()

CATEGORIES["reward"] = """
prize* benefit* reward* win winner* winning won gain* bonus* success* achiev*
earn* opportunit* profit* great best excellent accomplish* award* incentive*
promot* triumph* treasure* attain* get got obtain*
""".split()

CATEGORIES["risk"] = """
danger* risk* threat* doubt* crisis crises avoid* safe safety unsafe secur*
warn* fear* lose loses losing loss* lost emergenc* vulnerab* hazard* careful*
protect* trouble* disaster* catastroph* escap* bad worst worse harm* damag*
""".split()

WORK = """
job jobs work worked worker* working works employ* career* office* business*
company companies project* meeting* staff* hire* hiring fired salar* school*
student* teach* teacher* class classes universit* college* profession* corporat*
industr* manag* colleague* labor labour task* occupation* boss*
""".split()

LEISURE = """
game* sport* play played playing plays movie* film* music* tv television
vacation* holiday* party parties fun hobb* travel* restaurant* concert* bar bars
beach* dance* danc* entertain* festival* golf* football* baseball* basketball*
soccer* tennis* relax* leisure* weekend*
""".split()

RELIG = """
god god's goddess* church* relig* pray* faith* bible* christ* jesus muslim* islam*
jew* judai* spiritual* heaven* hell holy sacred pastor* priest* pope* worship*
sin sins sinful soul* bless* angel* devil* demon* mosque* temple* prophet* gospel*
""".split()

MONEY = """
money cash dollar* pay pays paid paying payment* tax taxes taxed taxpayer* cost*
price* budget* fund* financ* econom* bank* wealth* rich poor debt* spend* spent
invest* billion* million* profit* income* fee fees market* trade* trading
afford* loan* mortgage* salar* wage* cheap* expensive* stock* shares fortune*
""".split()

CATEGORIES["personal"] = sorted(set(WORK + LEISURE + RELIG + MONEY))

POSEMO = """
love loved lovely loves loving like liked likes good great best better happy
happi* glad joy* nice wonderful excellent amazing awesome beautiful brave
calm* care cared cares caring celebrat* cheer* comfort* confident* delight*
enjoy* excit* fantastic favor* favour* fine free freedom friendly fun generous
gentle grace* grateful* heal* hero* honest* honor* honour* hope* impress*
improve* inspir* kind kindly laugh* lucky peace* perfect* pleas* positive*
pretty proud* relief safe satisf* smile* strong succeed* success* support* sweet*
thank* trust* truth* useful valuable warm* welcome* win winner* winning won
""".split()

NEGEMO = """
abuse* afraid aggress* alarm* anger* angr* annoy* anxi* ashamed assault* attack*
awful bad betray* bitter* blame* bomb* bother* broke broken brutal* corrupt*
crime* criminal* crisis cruel* cry crying damn* danger* dead death* destroy*
disaster* disgust* distress* dread* evil* fail* fake* fear* fight* fraud* frighten*
furious* guilt* hate* hated hatred hurt* hostil* horribl* horrific* ignor*
insult* jealous* kill* liar* lie lied lies lying lose loser* losing loss* lost mad
mess* miserab* murder* nasty* nervous* outrage* pain* panic* pathetic* poison*
rage* rape* reject* sad sadly scandal* scare* scary shame* shock* sick* stupid*
suffer* terribl* terror* threat* tragic* trauma* ugly upset* victim* violen* war
wars worr* worse worst wrong*
""".split()

CATEGORIES["tone"] = POSEMO
CATEGORIES["affect"] = sorted(set(POSEMO + NEGEMO))

CATEGORIES["negate"] = """
no not never n't none nobody nothing neither nor nowhere cannot without
ain't isn't aren't wasn't weren't don't doesn't didn't won't can't
""".split()

CATEGORIES["swear"] = """
damn damned damnit dammit goddamn* hell shit* fuck* crap crappy bitch* bastard*
ass asshole* piss* pissed dick bullshit* screw screwed sucks suck jerk* wtf
""".split()

CATEGORIES["netspeak"] = """
lol lmao rofl omg btw idk imo imho smh tbh fyi thx pls plz brb ttyl u ur ya yall
y'all gonna wanna gotta kinda sorta ok okay yeah yep nope haha* hehe* xoxo wtf
bff ikr irl dm dms retweet* hashtag* tweet* selfie*
""".split()

CATEGORIES["interrog"] = """
who what when where why how which whom whose whatever whoever wherever whenever
however whichever
""".split()

CATEGORIES["i"] = "i me my mine myself i'm i've i'll i'd".split()
CATEGORIES["we"] = "we us our ours ourselves let's we're we've we'll we'd".split()
CATEGORIES["you"] = """
you your yours yourself yourselves u ya y'all yall you're you've you'll you'd thou thee
""".split()
CATEGORIES["shehe"] = """
he she him her his hers himself herself he's she's he'd she'd he'll she'll
""".split()

CATEGORIES["compare"] = """
than more less better best worse worst bigger biggest smaller smallest larger
largest greater greatest higher highest lower lowest fewer fewest most least
like alike same similar* compar* superior* inferior* equal* versus vs
""".split()

CATEGORIES["quant"] = """
all some many few most more less much several each every both half dozen* lot
lots plenty whole enough numerous countless any none single double triple
multiple* various majority minority amount* total* entire* bunch hundreds
thousands millions billions
""".split()

CATEGORIES["focuspast"] = """
was were had did been ago yesterday previously formerly earlier once used
said told went came took made gave got thought knew saw found felt became left
began brought called asked tried kept held wrote stood heard meant met paid sent
led ran lost spent grew won built fell bought caught taught sold fought
happened seemed wanted needed started showed turned moved lived believed
reported claimed announced revealed admitted denied accused confirmed
""".split()

CATEGORIES["focusfuture"] = """
will 'll shall gonna going tomorrow soon future upcoming plan plans planned
planning intend* expect* anticipat* forecast* predict* eventual* someday later
next coming await* prospect* aim aims hope hopes
""".split()

# ---------------------------------------------------------------------------
# Sentiment

BOOSTERS = {
    "very": 1, "really": 1, "so": 1, "too": 1, "most": 1, "more": 1, "quite": 1,
    "highly": 1, "deeply": 1, "totally": 1, "completely": 1, "truly": 1,
    "especially": 1, "particularly": 1, "extremely": 2, "incredibly": 2,
    "absolutely": 2, "utterly": 2, "remarkably": 1, "super": 1, "hugely": 2,
    "slightly": -1, "somewhat": -1, "barely": -1, "fairly": -1, "rather": -1,
    "little": -1, "kinda": -1, "partly": -1, "hardly": -2,
}

NEGATORS = """
not n't no never none nobody nothing neither nor nowhere cannot without
""".split()

# Nouns and verbs the adjective lexicon cannot cover; news-heavy vocabulary.
SENTIMENT_SUPPLEMENT = {
    "love": 3, "loved": 3, "loves": 3, "win": 2, "wins": 2, "won": 2, "victory": 3,
    "success": 3, "succeed": 2, "hope": 2, "praise": 3, "praised": 3, "celebrate": 3,
    "celebrated": 3, "thank": 2, "thanks": 2, "peace": 2, "benefit": 2, "support": 2,
    "hero": 3, "heroes": 3, "joy": 4, "triumph": 4, "freedom": 2,
    "hate": -4, "hated": -4, "hates": -4, "kill": -4, "killed": -4, "kills": -4,
    "killing": -4, "murder": -5, "murdered": -5, "death": -3, "dead": -3, "die": -3,
    "died": -3, "crime": -3, "crimes": -3, "attack": -3, "attacked": -3,
    "attacks": -3, "fraud": -4, "lie": -3, "lies": -3, "lied": -3, "liar": -4,
    "scandal": -3, "corruption": -4, "war": -3, "terror": -4, "terrorist": -4,
    "terrorism": -4, "threat": -3, "threats": -3, "fear": -3, "crisis": -3,
    "disaster": -4, "violence": -4, "abuse": -4, "rape": -5, "victim": -3,
    "victims": -3, "destroy": -3, "destroyed": -3, "fail": -2, "failed": -2,
    "failure": -3, "lose": -2, "lost": -2, "loss": -2, "shame": -3, "outrage": -3,
    "exploitation": -4, "laundering": -3, "perjury": -3, "blame": -2, "blamed": -2,
    "hurt": -3, "pain": -3, "damn": -3, "bomb": -3,
}

# ---------------------------------------------------------------------------
# Stop words: articles, pronouns, auxiliaries, prepositions, conjunctions,
# and common adverbs/determiners.

STOPWORDS = """
a about above after again against all am an and any are aren't as at be because
been before being below between both but by can can't cannot could couldn't did
didn't do does doesn't doing don't down during each few for from further had
hadn't has hasn't have haven't having he he'd he'll he's her here here's hers
herself him himself his how how's i i'd i'll i'm i've if in into is isn't it it's
its itself let's me more most mustn't my myself no nor not n't of off on once
only or other ought our ours ourselves out over own same shan't she she'd she'll
she's should shouldn't so some such than that that's the their theirs them
themselves then there there's these they they'd they'll they're they've this
those through to too under until up very was wasn't we we'd we'll we're we've
were weren't what what's when when's where where's which while who who's whom
why why's will with won't would wouldn't you you'd you'll you're you've your
yours yourself yourselves 's 're 've 'll 'd 'm just also
""".split()

# ---------------------------------------------------------------------------
# Closed-class backoff

CLOSED_CLASS = {
    "DT": "the a an this these those every each either neither another any no some all both".split(),
    "PRP": ("i me you he him she it we us they them myself yourself himself herself "
            "itself ourselves yourselves themselves").split(),
    "PRP$": "my your his its our their".split(),
    "WP": "who whom what whoever whatever".split(),
    "WP$": ["whose"],
    "WDT": ["which", "whichever"],
    "WRB": "where when why how whenever wherever".split(),
    "IN": ("of in on at by for from with into onto upon about above below between among "
           "through during before after against within without under over toward towards "
           "across along beyond throughout despite via unlike amid amidst whether because "
           "although though unless whereas while if than since until per").split(),
    "CC": "and or but nor plus".split(),
    "TO": ["to"],
    "MD": "can could may might must shall should will would ca wo".split(),
    "EX": ["there"],
    "UH": ("oh ah uh um hey wow ouch oops yes hello hi okay ok alas hmm huh yeah yep "
           "nope yay ugh whoa bravo amen").split(),
    "PDT": ["such", "quite", "half"],
    "POS": [],
}


def read_tagged(path):
    sentences = []
    for line in path.read_text(encoding="utf-8").splitlines():
        toks = []
        for item in line.split():
            word, _, tag = item.rpartition("/")
            if not word:
                continue
            tag = tag.split("|")[0]
            toks.append((word, tag))
        if toks:
            sentences.append(toks)
    return sentences


def write_training(sentences, out):
    with out.open("w", encoding="utf-8", newline="\n") as f:
        f.write("")
        for s in sentences:
            for w, t in s:
                f.write(f"{w}\t{t}\n")
            f.write("\n")


WORD_RE = re.compile(r"[A-Za-z]")


def write_frequency(sentences, out):
    counts = collections.Counter()
    total = 0
    for s in sentences:
        for w, _ in s:
            if not WORD_RE.search(w):
                continue
            counts[w.lower()] += 1
            total += 1
    with out.open("w", encoding="utf-8", newline="\n") as f:
        f.write("# Word frequencies per million word tokens, case-folded.\n")
        f.write(f"# Source: OANC tagged sample distributed with pattern3 3.0.0, {total} tokens.\n")
        f.write("@corpus oanc-sample\n")
        for w, c in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])):
            f.write(f"{w}\t{c * 1e6 / total:.4f}\n")


def strength_from_polarity(p):
    s = int(math.floor(abs(p) * 5 + 0.5))
    s = min(s, 5)
    return s if p >= 0 else -s


def write_sentiment(xml_path, out):
    senses = collections.defaultdict(list)
    for el in ET.parse(xml_path).getroot().iter("word"):
        form = el.get("form", "").strip().lower()
        if not form or " " in form or "*" in form:
            continue
        senses[form].append(float(el.get("polarity", "0")))
    terms = {}
    for form, pols in senses.items():
        s = strength_from_polarity(sum(pols) / len(pols))
        if abs(s) >= 2:
            terms[form] = s
    terms.update(SENTIMENT_SUPPLEMENT)
    with out.open("w", encoding="utf-8", newline="\n") as f:
        f.write("# Sentiment strengths in [-5,-2] and [2,5].\n")
        f.write("# Adjective strengths: round(5 * mean polarity) from the pattern3 3.0.0\n")
        f.write("# English sentiment lexicon (PDDL); nouns and verbs added by hand.\n")
        f.write("%terms\n")
        for w in sorted(terms):
            f.write(f"{w}\t{terms[w]}\n")
        f.write("%boosters\n")
        for w in sorted(BOOSTERS):
            f.write(f"{w}\t{BOOSTERS[w]}\n")
        f.write("%negators\n")
        for w in sorted(set(NEGATORS)):
            f.write(f"{w}\n")


def close_categories(categories):
    """Lookups resolve a word to one entry (exact before stem), so an exact
    entry must also be listed in every category holding a stem it matches."""
    cats = collections.OrderedDict((c, set(e.lower() for e in es)) for c, es in categories.items())
    exact = set(e for es in cats.values() for e in es if not e.endswith("*"))
    for cat, entries in cats.items():
        stems = [e[:-1] for e in entries if e.endswith("*")]
        for word in exact:
            if word not in entries and any(word.startswith(s) for s in stems):
                entries.add(word)
    return cats


def write_categories(out):
    with out.open("w", encoding="utf-8", newline="\n") as f:
        f.write("# Open word-category lexicon. `%category` opens a block; a trailing\n")
        f.write("# `*` matches any continuation.\n")
        f.write("@name newsstyle-open-categories\n")
        f.write("@version 1\n")
        for cat, entries in close_categories(CATEGORIES).items():
            f.write(f"%{cat}\n")
            for e in sorted(entries):
                f.write(f"{e}\n")


def write_closed_class(sentences, out):
    by_word = collections.defaultdict(collections.Counter)
    for s in sentences:
        for w, t in s:
            by_word[w.lower()][t] += 1
    kept, dropped = [], []
    for tag, words in CLOSED_CLASS.items():
        for w in words:
            c = by_word.get(w)
            if c and sum(c.values()) >= 5 and c[tag] / sum(c.values()) < 0.9:
                dropped.append((w, tag, dict(c.most_common(3))))
                continue
            kept.append((w, tag))
    with out.open("w", encoding="utf-8", newline="\n") as f:
        f.write("# Closed-class words forced to one tag; entries whose tag covers under 90%\n")
        f.write("# of their occurrences in the training sample are left to the tagger.\n")
        for w, t in sorted(kept):
            f.write(f"{w}\t{t}\n")
    for d in dropped:
        print("closed-class entry left to tagger:", d, file=sys.stderr)


def write_stopwords(out):
    with out.open("w", encoding="utf-8", newline="\n") as f:
        f.write("# English stop words, one per line.\n")
        for w in sorted(set(STOPWORDS)):
            f.write(f"{w}\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("pattern_dir", type=pathlib.Path)
    ap.add_argument("out_dir", type=pathlib.Path)
    args = ap.parse_args()

    corpus = args.pattern_dir / "test" / "corpora" / "tagged-en-oanc.txt"
    sentiment = args.pattern_dir / "pattern3" / "text" / "en" / "en-sentiment.xml"
    sentences = read_tagged(corpus)

    (args.out_dir / "training").mkdir(parents=True, exist_ok=True)
    write_training(sentences, args.out_dir / "training" / "oanc-tagged.tsv")
    write_frequency(sentences, args.out_dir / "frequency.tsv")
    write_sentiment(sentiment, args.out_dir / "sentiment.tsv")
    write_categories(args.out_dir / "categories.dic")
    write_closed_class(sentences, args.out_dir / "closed_class.tsv")
    write_stopwords(args.out_dir / "stopwords.txt")

    for p in (corpus, sentiment):
        print(f"{hashlib.sha256(p.read_bytes()).hexdigest()}  {p.name}")


if __name__ == "__main__":
    main()
