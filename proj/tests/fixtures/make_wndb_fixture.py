#!/usr/bin/env python3
"""Writes the WNDB excerpt under tests/fixtures/wndb/.

Synset offsets are byte offsets into the generated data files, as in the
real database. Re-running the script reproduces the committed files.
"""

from collections import defaultdict
from pathlib import Path

LICENSE = [
    "This software and database is being provided to you, the LICENSEE, by",
    "Princeton University under the following license.  By obtaining, using",
    "and/or copying this software and database, you agree that you have",
    "read, understood, and will comply with these terms and conditions.:",
    "",
    "Permission to use, copy, modify and distribute this software and",
    "database and its documentation for any purpose and without fee or",
    "royalty is hereby granted, provided that you agree to comply with",
    "the following copyright notice and statements, including the disclaimer,",
    "and that the same appear on ALL copies of the software, database and",
    "documentation, including modifications that you make for internal",
    "use or for distribution.",
    "",
    "WordNet 3.0 Copyright 2006 by Princeton University.  All rights reserved.",
    "",
    "THIS SOFTWARE AND DATABASE IS PROVIDED \"AS IS\" AND PRINCETON",
    "UNIVERSITY MAKES NO REPRESENTATIONS OR WARRANTIES, EXPRESS OR",
    "IMPLIED.  BY WAY OF EXAMPLE, BUT NOT LIMITATION, PRINCETON",
    "UNIVERSITY MAKES NO REPRESENTATIONS OR WARRANTIES OF MERCHANT-",
    "ABILITY OR FITNESS FOR ANY PARTICULAR PURPOSE OR THAT THE USE",
    "OF THE LICENSED SOFTWARE, DATABASE OR DOCUMENTATION WILL NOT",
    "INFRINGE ANY THIRD PARTY PATENTS, COPYRIGHTS, TRADEMARKS OR",
    "OTHER RIGHTS.",
    "",
    "The name of Princeton University or Princeton may not be used in",
    "advertising or publicity pertaining to distribution of the software",
    "and/or database.  Title to copyright in this software, database and",
    "any associated documentation shall at all times remain with",
    "Princeton University and LICENSEE agrees to preserve same.",
]

# key, ss_type, lex_file, words, pointers [(symbol, target_key)], frames, gloss
NOUNS = [
    ("entity", "n", 3, ["entity"], [], [], "that which is perceived or known or inferred to have its own distinct existence (living or nonliving)"),
    ("physical_entity", "n", 3, ["physical_entity"], [("@", "entity")], [], "an entity that has physical existence"),
    ("abstraction", "n", 3, ["abstraction", "abstract_entity"], [("@", "entity")], [], "a general concept formed by extracting common features from specific examples"),
    ("object", "n", 3, ["object", "physical_object"], [("@", "physical_entity")], [], 'a tangible and visible entity; an entity that can cast a shadow; "it was full of rackets, balls and other objects"'),
    ("whole", "n", 3, ["whole", "unit"], [("@", "object")], [], 'an assemblage of parts that is regarded as a single entity; "how big is that part compared to the whole?"; "the team is a unit"'),
    ("living_thing", "n", 3, ["living_thing", "animate_thing"], [("@", "whole")], [], "a living (or once living) entity"),
    ("organism", "n", 3, ["organism", "being"], [("@", "living_thing")], [], "a living thing that has (or can develop) the ability to act or function independently"),
    ("animal", "n", 5, ["animal", "animate_being", "beast", "brute", "creature", "fauna"], [("@", "organism")], [], "a living organism characterized by voluntary movement"),
    ("chordate", "n", 5, ["chordate"], [("@", "animal")], [], "any animal of the phylum Chordata having a notochord or spinal column"),
    ("vertebrate", "n", 5, ["vertebrate", "craniate"], [("@", "chordate")], [], "animals having a bony or cartilaginous skeleton with a segmented spinal column and a large brain enclosed in a skull or cranium"),
    ("bird", "n", 5, ["bird"], [("@", "vertebrate")], [], "warm-blooded egg-laying vertebrates characterized by feathers and forelimbs modified as wings"),
    ("columbiform_bird", "n", 5, ["columbiform_bird"], [("@", "bird")], [], "a cosmopolitan order of land birds having small heads and short legs with four unwebbed toes"),
    ("dove", "n", 5, ["dove"], [("@", "columbiform_bird")], [], "any of numerous small pigeons"),
    ("turtledove", "n", 5, ["turtledove"], [("@", "dove")], [], "any of several Old World wild doves"),
    ("australian_turtledove", "n", 5, ["Australian_turtledove", "turtledove", "Stictopelia_cuneata"], [("@", "turtledove")], [], "small Australian dove"),
    ("domestic_pigeon", "n", 5, ["domestic_pigeon"], [("@", "dove")], [], "domesticated dove bred for racing or display"),
    ("artifact", "n", 6, ["artifact", "artefact"], [("@", "whole")], [], "a man-made object taken as a whole"),
    ("instrumentality", "n", 6, ["instrumentality", "instrumentation"], [("@", "artifact")], [], "an artifact (or system of artifacts) that is instrumental in accomplishing some end"),
    ("conveyance", "n", 6, ["conveyance", "transport"], [("@", "instrumentality")], [], "something that serves as a means of transportation"),
    ("vehicle", "n", 6, ["vehicle"], [("@", "conveyance")], [], "a conveyance that transports people or objects"),
    ("wheeled_vehicle", "n", 6, ["wheeled_vehicle"], [("@", "vehicle")], [], "a vehicle that moves on wheels and usually has a container for transporting things or people"),
    ("self-propelled_vehicle", "n", 6, ["self-propelled_vehicle"], [("@", "wheeled_vehicle")], [], "a wheeled vehicle that carries in itself a means of propulsion"),
    ("motor_vehicle", "n", 6, ["motor_vehicle", "automotive_vehicle"], [("@", "self-propelled_vehicle")], [], "a self-propelled wheeled vehicle that does not run on rails"),
    ("car", "n", 6, ["car", "auto", "automobile", "machine", "motorcar"], [("@", "motor_vehicle")], [], 'a motor vehicle with four wheels; usually propelled by an internal combustion engine; "he needs a car to get to work"'),
    ("equipment", "n", 6, ["equipment"], [("@", "instrumentality")], [], "an instrumentality needed for an undertaking or to perform a service"),
    ("game_equipment", "n", 6, ["game_equipment"], [("@", "equipment")], [], "equipment or apparatus used in playing a game"),
    ("ball", "n", 6, ["ball"], [("@", "game_equipment")], [], 'round object that is hit or thrown or kicked in games; "the ball travelled 90 mph on his serve"'),
    ("implement", "n", 6, ["implement"], [("@", "instrumentality")], [], "instrumentation (a piece of equipment or tool) used to effect an end"),
    ("sports_implement", "n", 6, ["sports_implement"], [("@", "implement")], [], "an implement used in a sport"),
    ("racket", "n", 6, ["racket", "racquet"], [("@", "sports_implement")], [], "a sports implement (usually consisting of a handle and an oval frame with a tightly interlaced network of strings) used to strike a ball (or shuttlecock) in various games"),
    ("structure", "n", 6, ["structure", "construction"], [("@", "artifact")], [], 'a thing constructed; a complex entity constructed of many parts; "the structure consisted of a series of arches"'),
    ("building", "n", 6, ["building", "edifice"], [("@", "structure")], [], 'a structure that has a roof and walls and stands more or less permanently in one place; "there was a three-story building on the corner"'),
    ("mercantile_establishment", "n", 6, ["mercantile_establishment", "retail_store", "sales_outlet", "outlet"], [("@", "building")], [], "a place of business for retailing goods"),
    ("shopping_center", "n", 6, ["shopping_center", "shopping_centre"], [("@", "mercantile_establishment")], [], "mercantile establishment consisting of a carefully landscaped complex of shops representing leading merchandisers"),
    ("location", "n", 3, ["location"], [("@", "physical_entity")], [], "a point or extent in space"),
    ("area", "n", 15, ["area", "country"], [("@", "location")], [], 'a particular geographical region of indefinite boundary (usually serving some special purpose or distinguished by its people or culture or geography); "it was a mountainous area"'),
    ("center_activity", "n", 15, ["center", "centre"], [("@", "area")], [], 'a place where some particular activity is concentrated; "they received messages from several centers"'),
    ("center_middle", "n", 15, ["center", "centre", "middle", "heart", "eye"], [("@", "area")], [], 'an area that is approximately central within some larger region; "it is in the center of town"; "they ran forward into the heart of the struggle"'),
    ("part", "n", 3, ["part", "piece"], [("@", "object")], [], 'a portion of a natural object; "they analyzed the river into three parts"'),
    ("body_part", "n", 8, ["body_part"], [("@", "part")], [], "any part of an organism such as an organ or extremity"),
    ("external_body_part", "n", 8, ["external_body_part"], [("@", "body_part")], [], "any body part visible externally"),
    ("head_body", "n", 8, ["head", "caput"], [("@", "external_body_part")], [], 'the upper part of the human body or the front part of the body in animals; contains the face and brains; "he stuck his head out the window"'),
    ("person", "n", 3, ["person", "individual", "someone", "somebody", "mortal", "soul"], [("@", "organism")], [], 'a human being; "there was too much for one person to do"'),
    ("leader", "n", 18, ["leader"], [("@", "person")], [], "a person who rules or guides or inspires others"),
    ("head_person", "n", 18, ["head", "chief", "top_dog"], [("@", "leader")], [], 'a person who is in charge; "the head of the whole operation"'),
    ("linguist", "n", 18, ["linguist", "linguistic_scientist"], [("@", "person")], [], "a specialist in linguistics"),
    ("communication", "n", 3, ["communication"], [("@", "abstraction")], [], "something that is communicated by or to or between people or groups"),
    ("expression", "n", 10, ["expression", "manifestation", "reflection", "reflexion"], [("@", "communication")], [], 'expression without words; "tears are an expression of grief"'),
    ("definition", "n", 10, ["definition"], [("@", "communication")], [], "a concise explanation of the meaning of a word or phrase or symbol"),
    ("group", "n", 3, ["group", "grouping"], [("@", "abstraction")], [], "any number of entities (members) considered as a unit"),
    ("social_group", "n", 14, ["social_group"], [("@", "group")], [], "people sharing some social relation"),
    ("organization", "n", 14, ["organization", "organisation"], [("@", "social_group")], [], 'a group of people who work together'),
    ("institution", "n", 14, ["institution", "establishment"], [("@", "organization")], [], 'an organization founded and united for a specific purpose; "an educational institution"'),
    ("university", "n", 14, ["university"], [("@", "institution")], [], 'a large and diverse institution of higher learning created to educate for life and for a profession and to grant degrees'),
    ("princeton", "n", 14, ["Princeton", "Princeton_University"], [("@i", "university")], [], "a university in New Jersey"),
]

VERBS = [
    ("travel", "v", 38, ["travel", "go", "move", "locomote"], [], [(1, 0), (2, 0)], 'change location; move, travel, or proceed, also metaphorically; "How fast does your new car go?"; "We travelled from Rome to Naples by bus"'),
    ("drive", "v", 38, ["drive"], [("@", "travel")], [(2, 0), (22, 0)], 'travel or be transported in a vehicle; "We drove to the university every morning"'),
    ("fly", "v", 38, ["fly", "wing"], [("@", "travel")], [(2, 0)], 'travel through the air; be airborne; "Man cannot fly"'),
    ("understand", "v", 31, ["understand"], [], [(8, 0), (26, 0)], 'know and comprehend the nature or meaning of; "She did not understand her husband"'),
    ("interpret", "v", 31, ["interpret", "construe", "see"], [("@", "understand")], [(8, 0)], 'make sense of; assign a meaning to; "How do you interpret his behavior?"'),
    ("translate", "v", 32, ["translate", "interpret", "render"], [], [(8, 0), (11, 0)], 'restate (words) from one language into another language; "I have to translate when my in-laws from Austria visit the U.S."'),
    ("express", "v", 32, ["express", "verbalize", "verbalise", "utter", "give_tongue_to"], [], [(8, 0)], 'articulate; either verbally or with a cry, shout, or noise; "She expressed her anger"'),
    ("gesticulate", "v", 32, ["gesticulate", "gesture", "motion"], [("@", "express")], [(2, 0)], 'show, express or direct through movement; "He gestured his desire to leave"'),
]

ADJS = [
    ("expressive", "a", 0, ["expressive"], [("!", "inexpressive"), ("&", "eloquent"), ("&", "meaningful")], [], 'characterized by expression; "a very expressive face"'),
    ("eloquent", "s", 0, ["eloquent", "facile", "fluent", "silver", "silver-tongued", "smooth-spoken"], [("&", "expressive")], [], 'expressing yourself readily, clearly, effectively; "able to dazzle with his facile tongue"'),
    ("meaningful", "s", 0, ["meaningful", "pregnant", "significant"], [("&", "expressive")], [], 'rich in significance or implication; "a meaningful look"'),
    ("inexpressive", "a", 0, ["inexpressive"], [("!", "expressive"), ("&", "deadpan")], [], 'without expression; "an inexpressive face"'),
    ("deadpan", "s", 0, ["deadpan", "expressionless", "impassive", "poker-faced", "unexpressive"], [("&", "inexpressive")], [], 'deliberately impassive in manner; "deadpan humor"; "his face remained expressionless"'),
    ("good", "a", 0, ["good"], [("!", "bad")], [], 'having desirable or positive qualities especially those suitable for a thing specified; "good news from the hospital"; "a good report card"'),
    ("bad", "a", 0, ["bad"], [("!", "good")], [], 'having undesirable or negative qualities; "a bad report card"; "his sloppy appearance made a bad impression"'),
    ("quick", "a", 0, ["quick"], [("!", "slow")], [], 'accomplished rapidly and without delay; "was quick to make friends"'),
    ("slow", "a", 0, ["slow"], [("!", "quick")], [], 'not moving quickly; taking a comparatively long time; "a slow walker"'),
]

ADVS = [
    ("expressively", "r", 2, ["expressively"], [("\\", "expressive")], [], 'with expression; in an expressive manner; "she gave the order to the waiter, using her hands very expressively"'),
    ("inexpressively", "r", 2, ["inexpressively"], [("\\", "inexpressive")], [], 'in an inexpressive manner; "she stared at him inexpressively"'),
    ("quickly", "r", 2, ["quickly", "rapidly", "speedily", "chop-chop", "apace"], [("\\", "quick")], [], 'with rapid movements; "he works quickly"'),
    ("slowly", "r", 2, ["slowly", "slow", "easy", "tardily"], [("\\", "slow")], [], 'without speed (`slow\' is sometimes used informally for `slowly\'); "he spoke slowly"; "go easy here--the road is slippery"'),
    ("well", "r", 2, ["well", "good"], [("\\", "good")], [], 'in a good or proper or satisfactory manner or to a high standard; "the children behaved well"; "a task well done"'),
    ("badly", "r", 2, ["badly", "ill", "poorly"], [("\\", "bad")], [], 'in a poor or improper or unsatisfactory manner; not well; "he was badly prepared"'),
]

FILES = {"noun": NOUNS, "verb": VERBS, "adj": ADJS, "adv": ADVS}
POS_OF_FILE = {"noun": "n", "verb": "v", "adj": "a", "adv": "r"}


def header():
    return "".join(f"  {i} {text}  \n" if text else f"  {i}\n" for i, text in enumerate(LICENSE, 1))


def synset_line(entry, offsets, file_pos_of):
    key, ss_type, lex, words, pointers, frames, gloss = entry
    parts = [offsets[key], f"{lex:02d}", ss_type, f"{len(words):02x}"]
    for w in words:
        parts += [w if ss_type not in "as" or w != "silver" else w, "0"]
    parts.append(f"{len(pointers):03d}")
    for sym, target in pointers:
        tpos = file_pos_of[target]
        st = "0000" if sym in ("@", "@i", "~", "&") else "0101"
        parts += [sym, offsets[target], tpos, st]
    if frames:
        parts.append(f"{len(frames):02d}")
        for f_num, w_num in frames:
            parts += ["+", f"{f_num:02d}", f"{w_num:02x}"]
    return " ".join(parts) + " | " + gloss + "  \n"


def main():
    out_dir = Path(__file__).parent / "wndb"
    out_dir.mkdir(exist_ok=True)
    # pointer targets are written with the file-level pos (`a` for satellites)
    file_pos_of = {}
    for name, entries in FILES.items():
        for e in entries:
            file_pos_of[e[0]] = POS_OF_FILE[name]
    offsets = {k: "00000000" for k in file_pos_of}
    # line lengths do not depend on offset values (fixed width), so one pass
    for name, entries in FILES.items():
        pos_bytes = len(header().encode())
        for e in entries:
            offsets[e[0]] = f"{pos_bytes:08d}"
            pos_bytes += len(synset_line(e, offsets, file_pos_of).encode())
    index = defaultdict(lambda: defaultdict(list))
    ptr_types = defaultdict(lambda: defaultdict(set))
    for name, entries in FILES.items():
        body = header() + "".join(synset_line(e, offsets, file_pos_of) for e in entries)
        (out_dir / f"data.{name}").write_text(body)
        for e in entries:
            for w in e[3]:
                lemma = w.lower()
                index[name][lemma].append(offsets[e[0]])
                for sym, _ in e[4]:
                    ptr_types[name][lemma].add(sym)
    for name, lemmas in index.items():
        lines = []
        for lemma in sorted(lemmas):
            offs = lemmas[lemma]
            ptrs = sorted(ptr_types[name][lemma])
            fields = [lemma, POS_OF_FILE[name], str(len(offs)), str(len(ptrs)), *ptrs, str(len(offs)), "0", *offs]
            lines.append(" ".join(fields) + "  \n")
        (out_dir / f"index.{name}").write_text(header() + "".join(lines))


if __name__ == "__main__":
    main()
