#!/usr/bin/env python3
"""Regenerate data/lexicons/pos.tsv.

The tagger resolves a word by lexicon lookup before falling back to suffix
rules, so this file concentrates on what rules get wrong: function words,
irregular verb forms, early-modern contractions, and -er/-est comparatives.
Open-class coverage comes from curated base lists expanded morphologically.

The loader keeps the first row when a word repeats, so rows are emitted in
priority order: function words, irregular forms, then regular expansions.
"""

import collections
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "lexicons" / "pos.tsv"

PRONOUNS_PRP = """
i me you thou thee ye he him she it we us they them myself thyself himself
herself itself ourselves yourself yourselves themselves oneself mine thine
hers theirs ours yours whoso whosoever
""".split()

PRONOUNS_PRPS = "my thy your his its our their her".split()

DETERMINERS = """
the a an this these those every each another any some all both no such yon
yonder certain enough
""".split()

CONJUNCTIONS = "and but or nor".split()

PREPOSITIONS = """
of in with by from at on upon for as that if than though although while since
until till unless before after against among amongst between betwixt within
without during under over through throughout toward towards into unto per save
except like near beneath beside besides behind above below about around because
whether lest whilst ere sith amid amidst across along aboard atop despite
notwithstanding o'er past underneath via
""".split()

MODALS = """
can could may might must shall should will would wilt shalt canst couldst
mayst mightst wouldst shouldst ought oughtst dare durst need must twill 'twill
""".split()

WH_WORDS = "who whom what which whose whoever whatever whichever whomever".split()

INTERJECTIONS = """
o oh ah alas fie ho ha lo tush pish hey hurrah aye ay yea nay amen hark
prithee adieu hail welladay alack hem soft
""".split()

# where/when/why/how are Penn WRB; the tagset here folds them into RB.
ADVERBS = """
not never now then here again ever often seldom soon thus too very well almost
always away back else far forth hence thence whence hither thither whither
indeed instead much even just once only perhaps quite rather so still therefore
together tomorrow tonight today yesterday yet anon aside asunder withal verily
haply peradventure perchance straight presently nevermore where when why how
wherefore whereby wherein whereof whereon whereto whereupon howsoever
nonetheless nevertheless moreover already abroad afar afresh aloud anew apace
askance astray downward upward homeward henceforth heretofore hitherto
meanwhile oft ofttimes oftentimes out up down off twice thrice almost fast
hard late early near nearly
""".split()

COMPARATIVE_ADVERBS = "more less further farther rather sooner oftener".split()
SUPERLATIVE_ADVERBS = "most least furthest farthest soonest".split()

NUMBER_WORDS = """
one two three four five six seven eight nine ten eleven twelve thirteen
fourteen fifteen sixteen seventeen eighteen nineteen twenty thirty forty fifty
sixty seventy eighty ninety hundred thousand million twain dozen score
""".split()

EXISTENTIAL = ["there"]

# Tokenizer keeps internal apostrophes, so contractions are single words.
CONTRACTIONS = {
    "i'll": "MD", "he'll": "MD", "she'll": "MD", "we'll": "MD", "you'll": "MD",
    "they'll": "MD", "it'll": "MD", "thou'lt": "MD", "that'll": "MD",
    "can't": "MD", "won't": "MD", "shan't": "MD", "couldn't": "MD",
    "wouldn't": "MD", "shouldn't": "MD", "mustn't": "MD",
    "i'm": "VBP", "you're": "VBP", "we're": "VBP", "they're": "VBP",
    "i've": "VBP", "you've": "VBP", "we've": "VBP", "they've": "VBP",
    "don't": "VBP", "aren't": "VBP", "haven't": "VBP",
    "he's": "VBZ", "she's": "VBZ", "it's": "VBZ", "that's": "VBZ",
    "there's": "VBZ", "what's": "VBZ", "who's": "VBZ", "here's": "VBZ",
    "doesn't": "VBZ", "isn't": "VBZ", "hasn't": "VBZ",
    "didn't": "VBD", "wasn't": "VBD", "weren't": "VBD", "hadn't": "VBD",
    "let's": "VB",
    "i'd": "MD", "he'd": "MD", "she'd": "MD", "we'd": "MD", "you'd": "MD",
    "they'd": "MD",
    "ne'er": "RB", "e'er": "RB", "e'en": "RB", "oft'": "RB",
    # Leading apostrophes become separate punct tokens, so the bare remnants
    # of 'tis / 'twas / 'em / 'gainst need entries of their own.
    "tis": "VBZ", "twas": "VBD", "twere": "VBD", "em": "PRP",
    "gainst": "IN", "mongst": "IN", "gainsay": "VB",
}

# base: (VBZ, VBD, VBN). None in a slot falls back to regular inflection.
IRREGULAR_VERBS = {
    "be": ("is", "was", "been"),
    "have": ("has", "had", "had"),
    "do": ("does", "did", "done"),
    "go": ("goes", "went", "gone"),
    "say": ("says", "said", "said"),
    "make": ("makes", "made", "made"),
    "know": ("knows", "knew", "known"),
    "think": ("thinks", "thought", "thought"),
    "take": ("takes", "took", "taken"),
    "see": ("sees", "saw", "seen"),
    "come": ("comes", "came", "come"),
    "give": ("gives", "gave", "given"),
    "find": ("finds", "found", "found"),
    "tell": ("tells", "told", "told"),
    "become": ("becomes", "became", "become"),
    "show": ("shows", "showed", "shown"),
    "leave": ("leaves", "left", "left"),
    "feel": ("feels", "felt", "felt"),
    "bring": ("brings", "brought", "brought"),
    "begin": ("begins", "began", "begun"),
    "keep": ("keeps", "kept", "kept"),
    "hold": ("holds", "held", "held"),
    "write": ("writes", "wrote", "written"),
    "stand": ("stands", "stood", "stood"),
    "hear": ("hears", "heard", "heard"),
    "let": ("lets", "let", "let"),
    "mean": ("means", "meant", "meant"),
    "set": ("sets", "set", "set"),
    "meet": ("meets", "met", "met"),
    "run": ("runs", "ran", "run"),
    "pay": ("pays", "paid", "paid"),
    "sit": ("sits", "sat", "sat"),
    "speak": ("speaks", "spoke", "spoken"),
    "lie": ("lies", "lay", "lain"),
    "lead": ("leads", "led", "led"),
    "read": ("reads", "read", "read"),
    "grow": ("grows", "grew", "grown"),
    "lose": ("loses", "lost", "lost"),
    "fall": ("falls", "fell", "fallen"),
    "send": ("sends", "sent", "sent"),
    "build": ("builds", "built", "built"),
    "understand": ("understands", "understood", "understood"),
    "draw": ("draws", "drew", "drawn"),
    "break": ("breaks", "broke", "broken"),
    "spend": ("spends", "spent", "spent"),
    "cut": ("cuts", "cut", "cut"),
    "rise": ("rises", "rose", "risen"),
    "drive": ("drives", "drove", "driven"),
    "buy": ("buys", "bought", "bought"),
    "wear": ("wears", "wore", "worn"),
    "choose": ("chooses", "chose", "chosen"),
    "seek": ("seeks", "sought", "sought"),
    "throw": ("throws", "threw", "thrown"),
    "catch": ("catches", "caught", "caught"),
    "deal": ("deals", "dealt", "dealt"),
    "win": ("wins", "won", "won"),
    "forget": ("forgets", "forgot", "forgotten"),
    "lay": ("lays", "laid", "laid"),
    "prove": ("proves", "proved", "proven"),
    "hang": ("hangs", "hung", "hung"),
    "fly": ("flies", "flew", "flown"),
    "strike": ("strikes", "struck", "struck"),
    "bear": ("bears", "bore", "borne"),
    "beat": ("beats", "beat", "beaten"),
    "bend": ("bends", "bent", "bent"),
    "bid": ("bids", "bade", "bidden"),
    "bind": ("binds", "bound", "bound"),
    "bite": ("bites", "bit", "bitten"),
    "bleed": ("bleeds", "bled", "bled"),
    "blow": ("blows", "blew", "blown"),
    "breed": ("breeds", "bred", "bred"),
    "cast": ("casts", "cast", "cast"),
    "cling": ("clings", "clung", "clung"),
    "creep": ("creeps", "crept", "crept"),
    "dig": ("digs", "dug", "dug"),
    "drink": ("drinks", "drank", "drunk"),
    "eat": ("eats", "ate", "eaten"),
    "feed": ("feeds", "fed", "fed"),
    "fight": ("fights", "fought", "fought"),
    "flee": ("flees", "fled", "fled"),
    "fling": ("flings", "flung", "flung"),
    "forbid": ("forbids", "forbade", "forbidden"),
    "forgive": ("forgives", "forgave", "forgiven"),
    "forsake": ("forsakes", "forsook", "forsaken"),
    "freeze": ("freezes", "froze", "frozen"),
    "grind": ("grinds", "ground", "ground"),
    "hide": ("hides", "hid", "hidden"),
    "hit": ("hits", "hit", "hit"),
    "hurt": ("hurts", "hurt", "hurt"),
    "kneel": ("kneels", "knelt", "knelt"),
    "leap": ("leaps", "leapt", "leapt"),
    "lend": ("lends", "lent", "lent"),
    "put": ("puts", "put", "put"),
    "quit": ("quits", "quit", "quit"),
    "ride": ("rides", "rode", "ridden"),
    "ring": ("rings", "rang", "rung"),
    "seethe": ("seethes", "sod", "sodden"),
    "sell": ("sells", "sold", "sold"),
    "shake": ("shakes", "shook", "shaken"),
    "shed": ("sheds", "shed", "shed"),
    "shine": ("shines", "shone", "shone"),
    "shoot": ("shoots", "shot", "shot"),
    "shrink": ("shrinks", "shrank", "shrunk"),
    "shut": ("shuts", "shut", "shut"),
    "sing": ("sings", "sang", "sung"),
    "sink": ("sinks", "sank", "sunk"),
    "slay": ("slays", "slew", "slain"),
    "sleep": ("sleeps", "slept", "slept"),
    "slide": ("slides", "slid", "slid"),
    "sling": ("slings", "slung", "slung"),
    "smite": ("smites", "smote", "smitten"),
    "spin": ("spins", "spun", "spun"),
    "spit": ("spits", "spat", "spat"),
    "split": ("splits", "split", "split"),
    "spread": ("spreads", "spread", "spread"),
    "spring": ("springs", "sprang", "sprung"),
    "steal": ("steals", "stole", "stolen"),
    "stick": ("sticks", "stuck", "stuck"),
    "sting": ("stings", "stung", "stung"),
    "stink": ("stinks", "stank", "stunk"),
    "stride": ("strides", "strode", "stridden"),
    "swear": ("swears", "swore", "sworn"),
    "sweep": ("sweeps", "swept", "swept"),
    "swell": ("swells", "swelled", "swollen"),
    "swim": ("swims", "swam", "swum"),
    "swing": ("swings", "swung", "swung"),
    "teach": ("teaches", "taught", "taught"),
    "tear": ("tears", "tore", "torn"),
    "tread": ("treads", "trod", "trodden"),
    "wake": ("wakes", "woke", "woken"),
    "weave": ("weaves", "wove", "woven"),
    "weep": ("weeps", "wept", "wept"),
    "wind": ("winds", "wound", "wound"),
    "wring": ("wrings", "wrung", "wrung"),
}

# Suppletive and archaic forms that fit no paradigm.
EXTRA_VERB_FORMS = {
    "am": "VBP", "are": "VBP", "art": "VBP", "is": "VBZ", "was": "VBD",
    "wast": "VBD", "wert": "VBD", "were": "VBD", "been": "VBN", "being": "VBG",
    "hath": "VBZ", "hast": "VBP", "hadst": "VBD", "having": "VBG",
    "doth": "VBZ", "dost": "VBP", "didst": "VBD", "doing": "VBG",
    "goest": "VBP", "goeth": "VBZ", "going": "VBG",
    "saith": "VBZ", "sayst": "VBP", "quoth": "VBD",
    "spake": "VBD", "gat": "VBD", "holp": "VBD", "clomb": "VBD",
    "wot": "VBP", "wist": "VBD", "ween": "VBP", "trow": "VBP",
    "hie": "VB", "dote": "VB", "list": "VB", "recks": "VBZ",
}

REGULAR_VERBS = """
want use work call try ask turn follow play move live believe happen serve
help talk start look seem wait stay die walk remain suffer offer appear
consider expect love remember deny marry open close watch carry stop fear
hate like wish hope thank pray command obey attend desire dream doubt enter
fill gain guard honour honor join judge kill kiss knock laugh learn lift
look mark mourn name note observe part pass perform pity plague please
pluck praise prepare present press promise pull punish question raise
reach receive refuse rest return reward rule save scorn search seize
shame sigh sound stain stir study touch trust vow wail wander warn wash
waste weigh whip wonder wound yield accuse act add admire advise
affect aid aim allow answer approach arm arrest arrive attempt avoid banish
bar bath bathe beg behold belong beseech bestow betray bless boast borrow
bow breathe brew burn bury change charge charm chase cheer claim climb
comfort commend commit compare complain conceal conclude condemn confess
conquer consent conspire content continue corrupt counsel count cover crave
cross crown cry cure curse dance dare deceive declare deliver demand depart
descend deserve despise destroy devise dine discharge discover disdain
dismiss dispatch displease dissolve divide dress drown dwell ease employ
enjoy entreat envy esteem excuse fade fail faint fancy fashion fasten fetch
finish fit fix flatter flourish flow fold force frown gather gaze glance
govern grace grant grieve groan guess hand haste hasten heal heap hinder
hunt hush imagine import incline infect inform inherit injure inquire
instruct intend invite jest jump knit lack lament land last laud level
license lick light lighten linger live loathe lock lodge long look loose
love lower maintain manage mend mention merit mind mingle mock mount move
murder muse name need neglect nod nourish number nurse obey oblige obtain
offend order owe own pace paint pardon pause pawn perceive perish persuade
pierce pinch pine pitch plant plead pledge plot point poison ponder possess
pour pout practise preach prefer prepare preserve prevail prevent prick
print proclaim procure profane profess profit prolong pronounce prosper
protest provide provoke publish purchase purge purpose pursue quake quarrel
quench rage rail rain range ransom rate rave reason rebel rebuke recall
reckon recommend reconcile record recount redeem redress reform refrain
regard reign reject rejoice release relent relieve rely remove render renew
renounce repair repeal repent reply report repose reprove request require
rescue resemble reserve resign resist resolve respect restore restrain
retire revenge reverence revive revolt rid roar rob rot rouse rove ruin
rush sail salute satisfy scale scatter scold scour scratch seal season
second seduce seem sever shape share shield shift shipwreck shiver shout
shower shun signify sin slander slaughter slumber smell smile smooth sob
sojourn solicit sorrow sort sparkle speed spell spill spoil sport spurn spy
stagger stain stamp stare start starve state stain stoop store storm stray
stretch strive stuff subdue submit succeed suck sue suit summon sup supply
support suppose surfeit surrender survey swallow sway sweat swoon tame
taste tax tempt tend term testify threaten thrive thrust tie toil torment
toss trade traffic trail train trample transform translate travel tremble
trick trifle trip triumph trouble try tune tutor twist unfold unite urge
usurp utter value vanish vanquish vary vaunt venture verify vex view visit
voice void vouch wage wake wail wait wand wane want ward warrant watch
water wave wax weaken wed weep welcome whisper whistle wink wipe wish
wither witness woo worship wrap wreck wrest wrestle wrong
""".split()

IRREGULAR_PLURALS = {
    "men": "NNS", "women": "NNS", "children": "NNS", "feet": "NNS",
    "teeth": "NNS", "mice": "NNS", "geese": "NNS", "oxen": "NNS",
    "kine": "NNS", "brethren": "NNS", "lice": "NNS", "wives": "NNS",
    "lives": "NNS", "knives": "NNS", "leaves": "NNS", "thieves": "NNS",
    "selves": "NNS", "loaves": "NNS", "halves": "NNS", "calves": "NNS",
    "wolves": "NNS", "shelves": "NNS", "elves": "NNS", "sheaves": "NNS",
}

NOUNS = """
man woman child king queen lord lady sir madam master mistress prince
princess duke duchess earl count countess knight squire page servant slave
friend enemy foe brother sister father mother son daughter uncle aunt cousin
nephew niece husband wife widow maid maiden youth boy girl babe infant
soldier captain general lieutenant sergeant herald messenger ambassador
courtier counsellor judge lawyer priest friar monk nun bishop cardinal pope
clerk scholar student tutor doctor nurse apothecary merchant trader banker
beggar thief rogue knave villain fool jester clown shepherd shepherdess
farmer gardener cook butler porter groom host hostess guest stranger pilgrim
traveller sailor mariner pirate fisherman hunter archer swordsman murderer
traitor rebel outlaw prisoner guard keeper warden executioner hangman ghost
spirit witch wizard fairy angel devil demon god goddess fortune fate muse
heaven hell earth world land sea ocean river stream brook lake pond well
fountain spring mountain hill valley plain field meadow forest wood grove
tree oak willow rose lily flower garden orchard vineyard harvest grain corn
wheat bread wine ale beer milk honey salt meat flesh fish fowl bird eagle
hawk falcon raven crow owl dove swan nightingale lark sparrow wren swallow
peacock cock hen goose duck horse mare steed colt ass mule ox bull cow calf
sheep lamb ram ewe goat swine boar pig hound dog cur bitch cat lion lioness
tiger leopard bear wolf fox hare rabbit deer hart hind stag doe serpent
snake adder toad frog worm spider fly bee wasp ant beetle moth butterfly
day night morning morn noon evening eve midnight hour minute moment time
season year month week spring summer autumn winter dawn dusk twilight
sun moon star sky cloud rain snow hail frost ice wind storm tempest thunder
lightning mist fog dew shadow light darkness fire flame smoke ash ember
water air stone rock sand dust clay earth mud gold silver iron steel brass
copper lead tin jewel gem pearl diamond ruby emerald crown sceptre throne
palace castle tower wall gate door window hall chamber bed chair table
board bench stool couch curtain carpet mirror glass cup goblet bowl dish
plate knife spoon candle torch lamp lantern key lock chain rope cord thread
needle cloth silk velvet wool linen garment robe gown cloak coat doublet
hose boot shoe glove hat cap hood veil mask ring bracelet necklace purse
coin penny shilling crown ducat money wealth treasure fortune estate land
house home cottage inn tavern shop market street lane road path bridge
city town village country kingdom realm empire province shire county court
parliament council law statute decree charter deed bond contract will
testament letter paper book page scroll pen ink seal stamp word name title
honour honor fame glory renown praise blame shame disgrace scandal rumour
rumor news tidings message report tale story song ballad verse rhyme poem
play stage scene act curtain audience player actor part role speech prologue
epilogue music note tune melody harmony instrument lute viol pipe drum
trumpet horn bell voice sound noise silence echo cry shout whisper sigh
groan moan laugh smile tear sorrow grief woe misery despair anguish pain
ache wound scar bruise blood vein heart soul mind brain wit reason sense
memory thought fancy dream sleep rest peace war battle fight combat duel
siege victory defeat conquest triumph retreat march camp tent banner flag
standard sword blade dagger knife spear lance pike axe bow arrow quiver
shield armour armor helmet breastplate gauntlet spur saddle bridle rein
ship boat bark vessel sail mast anchor oar deck cabin harbour harbor port
shore coast cliff cave den nest lair burrow hole pit grave tomb sepulchre
coffin shroud corpse body limb arm hand finger thumb nail fist elbow
shoulder breast bosom chest belly stomach back spine hip thigh knee leg
foot toe heel ankle head face brow forehead eye eyelid lash cheek nose
nostril mouth lip tongue tooth chin jaw beard hair lock curl ear neck
throat skin flesh bone rib skull person people folk crowd throng multitude
company band troop host army navy fleet guard watch patrol nation tribe
race blood line lineage descent birth death life age youth infancy childhood
manhood womanhood marriage wedding funeral feast banquet supper dinner
breakfast meal fast hunger thirst appetite taste smell touch sight hearing
love hate envy jealousy pride vanity ambition greed avarice lust desire
passion affection fondness devotion loyalty faith trust hope charity mercy
pity compassion kindness cruelty malice spite revenge vengeance wrath anger
rage fury madness folly wisdom prudence courage valour valor cowardice
fear terror dread horror wonder awe surprise joy delight pleasure bliss
happiness mirth glee cheer comfort solace relief ease leisure labour labor
toil task work deed act action enterprise venture attempt effort pains
care duty office charge trust burden load weight measure number sum count
part portion share half quarter whole piece fragment remnant rest remainder
cause reason purpose end aim goal mark object matter thing affair business
case question answer reply doubt question problem riddle mystery secret
truth falsehood lie deceit fraud trick plot scheme device stratagem snare
trap net bait lure prize reward gift present token favour favor grace boon
blessing curse oath vow promise pledge threat warning counsel advice
command order charge request suit petition prayer plea appeal claim demand
offer proposal bargain sale purchase price cost value worth profit loss
gain advantage benefit harm hurt injury damage mischief evil good virtue
vice sin crime offence offense fault error mistake blunder folly jest joke
mockery scorn contempt disdain insult affront challenge defiance quarrel
dispute strife discord contention controversy debate argument discourse
conversation talk speech tongue language dialect accent phrase sentence
clause period pause breath spell charm enchantment magic sorcery witchcraft
omen portent sign token wonder miracle prodigy monster beast creature
nature kind sort manner fashion mode style custom habit practice usage
rule law principle maxim proverb saying adage motto emblem device badge
arms crest banner colours colors livery uniform dress attire apparel
""".split()

ADJECTIVES = """
good bad great small little big long short high low old young new ancient
fair foul sweet sour bitter sharp dull bright dark light heavy soft hard
rough smooth warm cold hot cool wet dry rich poor noble base brave bold
cowardly gentle rude kind cruel true false honest faithful loyal just unjust
wise foolish mad sane proud humble meek vain modest chaste pure impure holy
sacred profane blessed cursed happy sad merry sorry glad joyful mournful
cheerful gloomy grave solemn earnest idle busy quick slow swift speedy hasty
tardy early late fresh stale ripe rotten sound sick ill healthy strong weak
feeble mighty powerful able deft skilful skillful clumsy fine coarse neat
plain fancy gaudy gay grim fierce mild tame wild savage fell deadly mortal
immortal fatal lucky unlucky fortunate wretched miserable blest content
discontent eager keen zealous fervent ardent cool lukewarm tender loving
fond dear beloved hateful odious loathsome lovely beautiful handsome comely
pretty ugly hideous ghastly grisly horrid dreadful fearful awful terrible
frightful monstrous strange odd quaint curious rare common usual wonted
frequent seldom daily nightly yearly hourly present absent near distant far
remote close open shut secret hidden plain evident manifest clear obscure
dim faint loud silent still quiet calm peaceful troubled stormy rough serene
bloody gory pale wan ruddy rosy fiery flaming burning freezing frozen icy
snowy rainy cloudy misty foggy windy airy earthy watery heavenly hellish
devilish angelic divine human mortal brutal bestial beastly manly womanly
maidenly childish boyish girlish youthful aged elder eldest grey gray white
black red green blue yellow golden silver brazen leaden iron stony wooden
silken woollen velvet naked bare clad armed unarmed crowned throned royal
regal kingly queenly princely lordly knightly courtly stately majestic
imperial sovereign supreme chief principal main capital prime first last
next former latter single double triple treble sole only lone lonely alone
solitary several sundry divers diverse many few certain sure uncertain
doubtful dubious likely unlikely possible impossible needful needless
necessary vain useless useful fruitful fruitless barren fertile fat lean
thick thin broad narrow wide strait deep shallow steep level flat even
uneven crooked straight bent upright prone supine round square blunt keen
full empty whole entire perfect imperfect complete incomplete sound broken
torn rent whole hale lame blind deaf dumb mute hoarse shrill sweet tuneful
harsh jarring grating musical vocal loud soft gentle boisterous rough
violent furious raging frantic desperate reckless rash heedless careful
careless wary watchful vigilant drowsy sleepy wakeful weary tired fresh
lively brisk nimble agile supple stiff numb senseless witty clever cunning
sly subtle crafty artful simple silly stupid dull slow apt fit meet proper
decent seemly unseemly worthy unworthy deserving guilty guiltless innocent
harmless hurtful noisome wholesome noxious deadly poisonous venomous rank
gross foul filthy dirty unclean cleanly dainty delicate nice tender raw
sore grievous painful smart aching sickly queasy faint dizzy giddy drunk
sober temperate moderate excessive extreme utter sheer mere very arrant
notorious famous renowned noted obscure nameless unknown familiar foreign
alien native natural unnatural kindly unkind friendly hostile adverse
contrary opposite cross froward perverse wayward stubborn obstinate wilful
willful headstrong gracious gallant courteous civil mannerly rude churlish
surly sullen moody peevish fretful testy touchy jealous envious covetous
greedy liberal generous bounteous bountiful frank free thrifty sparing
miserly niggardly prodigal lavish wasteful wanton loose lewd lustful
amorous bashful shy coy demure grave staid sage prudent discreet
""".split()

IRREGULAR_ADJ = {
    "better": "JJR", "best": "JJS", "worse": "JJR", "worst": "JJS",
    "elder": "JJR", "eldest": "JJS", "lesser": "JJR", "utmost": "JJS",
    "inmost": "JJS", "topmost": "JJS", "foremost": "JJS", "hindmost": "JJS",
    "uttermost": "JJS", "innermost": "JJS", "outermost": "JJS",
    "nethermost": "JJS",
}

VOWELS = set("aeiou")


def verb_forms(base):
    forms = {base: "VB"}
    irregular = IRREGULAR_VERBS.get(base)

    if base.endswith(("s", "sh", "ch", "x", "z")):
        third = base + "es"
    elif base.endswith("y") and len(base) > 1 and base[-2] not in VOWELS:
        third = base[:-1] + "ies"
    elif base.endswith("o"):
        third = base + "es"
    else:
        third = base + "s"

    if base.endswith("e"):
        past, gerund = base + "d", base[:-1] + "ing"
        thou, eth = base + "st", base[:-1] + "eth"
    elif base.endswith("y") and len(base) > 1 and base[-2] not in VOWELS:
        past, gerund = base[:-1] + "ied", base + "ing"
        thou, eth = base[:-1] + "iest", base[:-1] + "ieth"
    else:
        past, gerund = base + "ed", base + "ing"
        thou, eth = base + "est", base + "eth"

    if irregular:
        third = irregular[0] or third
        past = irregular[1] or past
        forms[irregular[1]] = "VBD"
        if irregular[2] and irregular[2] != irregular[1]:
            forms[irregular[2]] = "VBN"
    else:
        forms[past] = "VBD"
    forms[third] = "VBZ"
    forms[gerund] = "VBG"
    forms[thou] = "VBP"
    forms[eth] = "VBZ"
    return forms


def adjective_forms(base):
    forms = {base: "JJ"}
    if len(base) > 7 or base.endswith("ly"):
        return forms  # long adjectives take more/most
    if base.endswith("e"):
        er, est = base + "r", base + "st"
    elif base.endswith("y") and len(base) > 1 and base[-2] not in VOWELS:
        er, est = base[:-1] + "ier", base[:-1] + "iest"
    else:
        er, est = base + "er", base + "est"
    forms[er] = "JJR"
    forms[est] = "JJS"
    return forms


def noun_forms(base):
    forms = {base: "NN"}
    if base.endswith(("s", "sh", "ch", "x", "z")):
        plural = base + "es"
    elif base.endswith("y") and len(base) > 1 and base[-2] not in VOWELS:
        plural = base[:-1] + "ies"
    elif base.endswith("f"):
        plural = base[:-1] + "ves"
    elif base.endswith("fe"):
        plural = base[:-2] + "ves"
    else:
        plural = base + "s"
    forms[plural] = "NNS"
    return forms


def main():
    rows = []

    def emit(word, tag):
        word = word.strip().lower()
        if word:
            rows.append((word, tag))

    for w in PRONOUNS_PRP:
        emit(w, "PRP")
    for w in PRONOUNS_PRPS:
        emit(w, "PRP$")
    for w in DETERMINERS:
        emit(w, "DT")
    for w in CONJUNCTIONS:
        emit(w, "CC")
    for w in PREPOSITIONS:
        emit(w, "IN")
    emit("to", "TO")
    for w in MODALS:
        emit(w, "MD")
    for w in WH_WORDS:
        emit(w, "WP")
    for w in EXISTENTIAL:
        emit(w, "EX")
    for w in INTERJECTIONS:
        emit(w, "UH")
    for w in ADVERBS:
        emit(w, "RB")
    for w in COMPARATIVE_ADVERBS:
        emit(w, "RBR")
    for w in SUPERLATIVE_ADVERBS:
        emit(w, "RBS")
    for w in NUMBER_WORDS:
        emit(w, "CD")
    for w, tag in CONTRACTIONS.items():
        emit(w, tag)
    for w, tag in EXTRA_VERB_FORMS.items():
        emit(w, tag)
    for w, tag in IRREGULAR_ADJ.items():
        emit(w, tag)
    for w, tag in IRREGULAR_PLURALS.items():
        emit(w, tag)

    for base in sorted(set(IRREGULAR_VERBS) | set(REGULAR_VERBS)):
        for w, tag in sorted(verb_forms(base).items()):
            emit(w, tag)
    for base in sorted(set(NOUNS)):
        for w, tag in sorted(noun_forms(base).items()):
            emit(w, tag)
    for base in sorted(set(ADJECTIVES)):
        for w, tag in sorted(adjective_forms(base).items()):
            emit(w, tag)

    seen = set()
    unique = []
    for word, tag in rows:
        if word not in seen:
            seen.add(word)
            unique.append((word, tag))

    OUT.parent.mkdir(parents=True, exist_ok=True)
    with open(OUT, "w", encoding="utf-8") as f:
        f.write("# generated by scripts/build_pos_lexicon.py; do not edit by hand\n")
        for word, tag in unique:
            f.write(f"{word}\t{tag}\n")

    counts = collections.Counter(tag for _, tag in unique)
    total = sum(counts.values())
    print(f"wrote {OUT} ({total} entries)")
    for tag, c in counts.most_common():
        print(f"  {tag:5s} {c}")


if __name__ == "__main__":
    main()
